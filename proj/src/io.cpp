#include "semicat/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "semicat/errors.hpp"

namespace semicat {

namespace {

std::vector<std::string> tokens(std::string const& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) {
    out.push_back(t);
  }
  return out;
}

std::vector<std::string> content_lines(std::string const& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    if (!tokens(line).empty()) {
      out.push_back(line);
    }
  }
  return out;
}

int parse_int(std::string const& t, std::string const& what) {
  try {
    size_t used = 0;
    int v = std::stoi(t, &used);
    if (used != t.size()) {
      throw std::invalid_argument(t);
    }
    return v;
  } catch (std::exception const&) {
    throw ParseError("expected an integer for " + what + ", got '" + t + "'");
  }
}

}  // namespace

FiniteSemigroup parse_cayley(std::string const& text) {
  auto lines = content_lines(text);
  if (lines.empty()) {
    throw ParseError("empty input");
  }
  size_t at = 0;
  int n = parse_int(tokens(lines[at++]).at(0), "the order");
  if (n <= 0) {
    throw ParseError("order must be positive");
  }
  if (lines.size() < at + n) {
    throw ParseError("truncated table");
  }
  std::vector<std::vector<int>> grid(n);
  for (int i = 0; i < n; ++i) {
    auto row = tokens(lines[at++]);
    if (static_cast<int>(row.size()) != n) {
      throw ParseError("row " + std::to_string(i) + " has "
                       + std::to_string(row.size()) + " entries, expected "
                       + std::to_string(n));
    }
    for (auto const& t : row) {
      grid[i].push_back(parse_int(t, "a table entry"));
    }
  }
  std::vector<std::string> labels;
  int zero_hint = -1;
  while (at < lines.size()) {
    auto row = tokens(lines[at]);
    if (row[0] == "labels:") {
      labels.assign(row.begin() + 1, row.end());
    } else if (row[0] == "zero:") {
      if (row.size() != 2) {
        throw ParseError("zero: line needs one index");
      }
      zero_hint = parse_int(row[1], "the zero index");
    } else {
      throw ParseError("unexpected line: " + lines[at]);
    }
    ++at;
  }
  return from_cayley_table(grid, labels, zero_hint);
}

std::string serialize_cayley(FiniteSemigroup const& s) {
  std::ostringstream out;
  out << s.order << "\n";
  for (elem a = 0; a < s.order; ++a) {
    for (elem b = 0; b < s.order; ++b) {
      out << (b ? " " : "") << s.mul(a, b);
    }
    out << "\n";
  }
  out << "labels:";
  for (auto const& l : s.labels) {
    out << " " << l;
  }
  out << "\n";
  if (s.zero >= 0) {
    out << "zero: " << s.zero << "\n";
  }
  return out.str();
}

SOCategory parse_socat(std::string const& text) {
  auto lines = content_lines(text);
  if (lines.empty() || tokens(lines[0]).at(0) != "socat") {
    throw ParseError("missing socat header");
  }
  SOCategory C;
  std::map<std::string, mor> by_name;
  std::vector<std::tuple<std::string, std::string, std::string>> compose_lines;
  for (size_t at = 1; at < lines.size(); ++at) {
    auto row = tokens(lines[at]);
    if (row[0] == "objects") {
      C.num_objects = parse_int(row.at(1), "object count");
      C.obj_idem.assign(C.num_objects, -1);
      for (obj c = 0; c < C.num_objects; ++c) {
        C.obj_name.push_back("c" + std::to_string(c));
      }
    } else if (row[0] == "mor") {
      if (row.size() != 4) {
        throw ParseError("mor line needs name, dom, cod");
      }
      if (by_name.count(row[1])) {
        throw ParseError("duplicate morphism name " + row[1]);
      }
      int d = parse_int(row[2], "dom"), c = parse_int(row[3], "cod");
      if (d < 0 || d >= C.num_objects || c < 0 || c >= C.num_objects) {
        throw ParseError("morphism endpoints out of range");
      }
      by_name.emplace(row[1], static_cast<mor>(C.mors.size()));
      C.mors.push_back({d, c, -1, row[1]});
    } else if (row[0] == "id") {
      if (C.identity_.empty()) {
        C.identity_.assign(C.num_objects, -1);
      }
      C.identity_.at(parse_int(row.at(1), "object")) = by_name.at(row.at(2));
    } else if (row[0] == "incl") {
      if (C.incl.empty()) {
        C.obj_leq.assign(C.num_objects,
                         std::vector<bool>(C.num_objects, false));
        C.incl.assign(C.num_objects, std::vector<mor>(C.num_objects, -1));
      }
      int a = parse_int(row.at(1), "dom"), b = parse_int(row.at(2), "cod");
      C.obj_leq.at(a).at(b) = true;
      C.incl.at(a).at(b) = by_name.at(row.at(3));
    } else if (row[0] == "compose") {
      compose_lines.emplace_back(row.at(1), row.at(2), row.at(3));
    } else {
      throw ParseError("unexpected line: " + lines[at]);
    }
  }
  if (C.num_objects == 0) {
    throw ParseError("no objects");
  }
  int m = C.num_morphisms();
  C.comp.assign(m, std::vector<mor>(m, -1));
  for (auto const& [f, g, h] : compose_lines) {
    if (!by_name.count(f) || !by_name.count(g) || !by_name.count(h)) {
      throw ParseError("compose line with unknown morphism");
    }
    C.comp[by_name[f]][by_name[g]] = by_name[h];
  }
  if (C.identity_.empty()) {
    throw ParseError("no identities");
  }
  if (C.incl.empty()) {
    C.obj_leq.assign(C.num_objects, std::vector<bool>(C.num_objects, false));
    C.incl.assign(C.num_objects, std::vector<mor>(C.num_objects, -1));
  }
  // identity inclusions are implicit
  for (obj c = 0; c < C.num_objects; ++c) {
    if (C.identity_[c] >= 0 && C.incl[c][c] < 0) {
      C.obj_leq[c][c] = true;
      C.incl[c][c] = C.identity_[c];
    }
  }
  try {
    C.finalize();
  } catch (AxiomViolationError const& e) {
    throw ParseError(std::string("not a category with subobjects: ")
                     + e.what());
  }
  return C;
}

std::string serialize_socat(SOCategory const& C) {
  std::ostringstream out;
  out << "socat\nobjects " << C.num_objects << "\n";
  for (mor f = 0; f < C.num_morphisms(); ++f) {
    out << "mor m" << f << " " << C.dom(f) << " " << C.cod(f) << "\n";
  }
  for (obj c = 0; c < C.num_objects; ++c) {
    out << "id " << c << " m" << C.id(c) << "\n";
  }
  for (obj a = 0; a < C.num_objects; ++a) {
    for (obj b = 0; b < C.num_objects; ++b) {
      if (C.obj_leq[a][b] && a != b) {
        out << "incl " << a << " " << b << " m" << C.incl[a][b] << "\n";
      }
    }
  }
  for (mor f = 0; f < C.num_morphisms(); ++f) {
    for (mor g = 0; g < C.num_morphisms(); ++g) {
      if (C.cod(f) == C.dom(g)) {
        out << "compose m" << f << " m" << g << " m" << C.comp[f][g] << "\n";
      }
    }
  }
  return out.str();
}

ReesSpec parse_rees_spec(std::string const& text) {
  auto lines = content_lines(text);
  if (lines.empty()) {
    throw ParseError("empty input");
  }
  size_t at = 0;
  int n = parse_int(tokens(lines[at++]).at(0), "the group order");
  if (n <= 0 || lines.size() < at + n) {
    throw ParseError("truncated group table");
  }
  std::vector<std::vector<int>> grid(n);
  for (int i = 0; i < n; ++i) {
    auto row = tokens(lines[at++]);
    if (static_cast<int>(row.size()) != n) {
      throw ParseError("group row has wrong length");
    }
    for (auto const& t : row) {
      grid[i].push_back(parse_int(t, "a group entry"));
    }
  }
  std::vector<std::string> labels;
  if (at < lines.size() && tokens(lines[at])[0] == "labels:") {
    auto row = tokens(lines[at++]);
    labels.assign(row.begin() + 1, row.end());
  }
  auto group = from_cayley_table(grid, labels);
  auto expect = [&](std::string const& key) {
    if (at >= lines.size()) {
      throw ParseError("missing " + key + " line");
    }
    auto row = tokens(lines[at++]);
    if (row.size() != 2 || row[0] != key) {
      throw ParseError("expected '" + key + " <count>'");
    }
    return parse_int(row[1], key);
  };
  int i_size = expect("I:");
  int l_size = expect("L:");
  std::map<std::string, int> by_label;
  for (elem g = 0; g < group.order; ++g) {
    by_label[group.label(g)] = g;
  }
  std::vector<std::vector<int>> matrix(l_size);
  for (int l = 0; l < l_size; ++l) {
    if (at >= lines.size()) {
      throw ParseError("truncated sandwich matrix");
    }
    auto row = tokens(lines[at++]);
    if (static_cast<int>(row.size()) != i_size) {
      throw ParseError("matrix row has wrong length");
    }
    for (auto const& t : row) {
      if (t == "0") {
        matrix[l].push_back(-1);
      } else if (by_label.count(t)) {
        matrix[l].push_back(by_label[t]);
      } else {
        throw ParseError("unknown group label '" + t + "' in the matrix");
      }
    }
  }
  return make_rees_spec(std::move(group), i_size, l_size, std::move(matrix));
}

std::string serialize_rees_spec(ReesSpec const& spec) {
  std::ostringstream out;
  out << serialize_cayley(spec.group);
  out << "I: " << spec.i_size << "\nL: " << spec.l_size << "\n";
  for (int l = 0; l < spec.l_size; ++l) {
    for (int i = 0; i < spec.i_size; ++i) {
      out << (i ? " " : "")
          << (spec.matrix[l][i] < 0 ? "0"
                                    : spec.group.label(spec.matrix[l][i]));
    }
    out << "\n";
  }
  return out.str();
}

std::string serialize_groupoid(InductiveGroupoid const& G) {
  std::ostringstream out;
  out << "groupoid\nobjects " << G.num_objects << "\nmeet\n";
  for (int e = 0; e < G.num_objects; ++e) {
    for (int f = 0; f < G.num_objects; ++f) {
      out << (f ? " " : "") << G.meet[e][f];
    }
    out << "\n";
  }
  out << "arrows " << G.num_arrows() << "\n";
  for (int x = 0; x < G.num_arrows(); ++x) {
    out << "arrow " << x << " " << G.arrows[x].dom << " " << G.arrows[x].cod
        << " " << G.arrows[x].inv << " " << G.arrows[x].name << "\n";
  }
  out << "order\n";
  for (int x = 0; x < G.num_arrows(); ++x) {
    for (int y = 0; y < G.num_arrows(); ++y) {
      if (G.leq[x][y] && x != y) {
        out << x << " " << y << "\n";
      }
    }
  }
  return out.str();
}

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot read " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string fnv1a_digest(std::string const& data) {
  unsigned long long h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", h);
  return buf;
}

}  // namespace semicat
