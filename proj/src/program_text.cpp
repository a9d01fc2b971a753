#include "rmc/program.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace rmc {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::uint64_t parse_uint(const std::string& s, const char* what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ProgramError(std::string("bad ") + what + ": '" + s + "'");
  return std::stoull(s);
}

Discipline parse_discipline(const std::string& s) {
  if (s == "plain") return Discipline::plain;
  if (s == "sequential") return Discipline::sequential;
  if (s == "rm") return Discipline::rm;
  throw ProgramError("unknown discipline '" + s + "'");
}

TableSpec parse_header(const std::string& line) {
  TableSpec spec;
  bool have_states = false, have_tapes = false, have_a = false, have_k = false, have_disc = false;
  std::optional<std::uint32_t> qout;
  for (const auto& tok : split_ws(line)) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw ProgramError("bad header field '" + tok + "'");
    std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    if (key == "states") {
      spec.states = static_cast<std::uint32_t>(parse_uint(val, "states"));
      have_states = true;
    } else if (key == "tapes") {
      spec.tapes = static_cast<std::uint32_t>(parse_uint(val, "tapes"));
      have_tapes = true;
    } else if (key == "a") {
      spec.bound.a = parse_uint(val, "a");
      have_a = true;
    } else if (key == "k") {
      spec.bound.k = parse_uint(val, "k");
      have_k = true;
    } else if (key == "discipline") {
      spec.discipline = parse_discipline(val);
      have_disc = true;
    } else if (key == "initial") {
      spec.initial = static_cast<std::uint32_t>(parse_uint(val, "initial"));
    } else if (key == "qout") {
      qout = static_cast<std::uint32_t>(parse_uint(val, "qout"));
    } else if (key == "copy") {
      spec.copy_state = static_cast<std::uint32_t>(parse_uint(val, "copy"));
    } else {
      throw ProgramError("unknown header field '" + key + "'");
    }
  }
  if (!have_states || !have_tapes || !have_a || !have_k || !have_disc)
    throw ProgramError("header needs states, tapes, a, k and discipline");
  spec.q_out = qout ? *qout : spec.states - 1;
  return spec;
}

std::pair<TransitionKey, Transition> parse_transition(const std::string& line, std::uint32_t tapes) {
  static const std::regex re(
      R"(^\(\s*(\d+)\s*,\s*([01#B])\s*,([^)]*)\)\s*->\s*\(\s*(\d+)\s*,([^,]*),\s*([RS])\s*,\s*([01-])\s*\)$)");
  std::smatch m;
  if (!std::regex_match(line, m, re)) throw ProgramError("bad transition line: " + line);
  TransitionKey k;
  Transition t;
  k.state = static_cast<std::uint32_t>(parse_uint(m[1], "state"));
  k.in = sym_from_char(m[2].str()[0]);
  for (const auto& s : split_ws(m[3])) {
    if (s.size() != 1) throw ProgramError("bad work symbol '" + s + "'");
    k.work.push_back(sym_from_char(s[0]));
  }
  t.next = static_cast<std::uint32_t>(parse_uint(m[4], "state"));
  for (const auto& s : split_ws(m[5])) {
    if (s.size() != 3 || s[1] != '/') throw ProgramError("bad write/move '" + s + "'");
    t.writes.push_back(sym_from_char(s[0]));
    switch (s[2]) {
      case 'L': t.moves.push_back(Move::L); break;
      case 'S': t.moves.push_back(Move::S); break;
      case 'R': t.moves.push_back(Move::R); break;
      default: throw ProgramError("bad head move '" + s + "'");
    }
  }
  if (k.work.size() != tapes || t.writes.size() != tapes)
    throw ProgramError("work tape arity mismatch: " + line);
  t.advance_input = m[6] == "R";
  if (m[7] != "-") t.out = m[7] == "1" ? 1 : 0;
  return {k, t};
}

}  // namespace

Program parse_program_text(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> wraps;
  std::optional<TableSpec> spec;
  for (std::string raw; std::getline(in, raw);) {
    if (auto c = raw.find(';'); c != std::string::npos) raw.resize(c);
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (!spec && line.rfind("wrap=", 0) == 0) {
      std::string w = line.substr(5);
      if (w != "ex" && w != "prefix") throw ProgramError("unknown wrapper '" + w + "'");
      wraps.push_back(w);
    } else if (!spec) {
      spec = parse_header(line);
    } else {
      spec->transitions.push_back(parse_transition(line, spec->tapes));
    }
  }
  if (!spec) throw ProgramError("missing program header");
  Program p = Program::table(std::move(*spec));
  for (auto it = wraps.rbegin(); it != wraps.rend(); ++it)
    p = *it == "ex" ? Program::ex(p) : Program::prefix_search(p);
  return p;
}

std::string program_text(const Program& p) {
  std::ostringstream out;
  const Program* cur = &p;
  while (cur->kind() != Program::Kind::table) {
    out << (cur->kind() == Program::Kind::ex ? "wrap=ex\n" : "wrap=prefix\n");
    cur = &cur->inner();
  }
  const Program& t = *cur;
  out << "states=" << t.states() << " tapes=" << t.tapes() << " a=" << t.bound().a
      << " k=" << t.bound().k << " discipline=" << discipline_name(t.discipline())
      << " initial=" << t.initial() << " qout=" << t.q_out();
  if (t.copy_state()) out << " copy=" << *t.copy_state();
  out << "\n";
  for (const auto& [key, tr] : t.transitions()) {
    TransitionKey k = t.unkey(key);
    out << "(" << k.state << "," << sym_char(k.in) << ",";
    for (std::size_t i = 0; i < k.work.size(); ++i) out << (i ? " " : "") << sym_char(k.work[i]);
    out << ") -> (" << tr.next << ",";
    for (std::size_t i = 0; i < tr.writes.size(); ++i)
      out << (i ? " " : "") << sym_char(tr.writes[i]) << "/" << move_char(tr.moves[i]);
    out << "," << (tr.advance_input ? 'R' : 'S') << ",";
    out << (tr.out ? static_cast<char>('0' + *tr.out) : '-') << ")\n";
  }
  return out.str();
}

Program load_program_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProgramError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_program_text(buf.str());
}

}  // namespace rmc
