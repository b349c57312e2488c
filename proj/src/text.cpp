#include "ptp/text.hpp"

namespace ptp {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

static std::string trimmed(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::string format_row(const Row& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

Row parse_row(const std::string& s) {
  std::string t = trimmed(s);
  if (t.empty()) return {};
  Row v;
  for (const std::string& tok : split(t, ',')) {
    std::string u = trimmed(tok);
    try {
      size_t used = 0;
      long long x = std::stoll(u, &used);
      if (used != u.size()) throw std::invalid_argument(u);
      v.push_back(x);
    } catch (const std::exception&) {
      throw ValidationError("bad integer tuple: " + s);
    }
  }
  return v;
}

std::string format_pattern(const GTPattern& m) {
  std::string out;
  for (size_t k = 0; k < m.rows.size(); ++k) {
    if (k) out += ';';
    out += format_row(m.rows[k]);
  }
  return out;
}

GTPattern parse_pattern(const std::string& s) {
  GTPattern m;
  for (const std::string& tok : split(s, ';')) m.rows.push_back(parse_row(tok));
  if (!valid_pattern(m)) throw ValidationError("bad pattern: " + s);
  return m;
}

std::string format_path(const std::vector<Staircase>& path) {
  std::string out;
  for (size_t k = 0; k < path.size(); ++k) {
    if (k) out += ';';
    out += format_row(path[k]);
  }
  return out;
}

std::vector<Staircase> parse_path(const std::string& s) {
  std::vector<Staircase> path;
  for (const std::string& tok : split(s, ';')) path.push_back(parse_row(tok));
  return path;
}

std::string format_mixed(const MixedDiagram& m) {
  return "((" + format_row(m.left) + "),(" + format_row(m.right) + "))";
}

MixedDiagram parse_mixed(const std::string& s, int d) {
  std::string t = trimmed(s);
  // expect ((a,b,...),(c,...)) with possibly empty sides
  if (t.size() < 6 || t.front() != '(' || t.back() != ')')
    throw ValidationError("bad mixed diagram: " + s);
  std::string inner = t.substr(1, t.size() - 2);
  // split at the top-level comma between the two parenthesised sides
  int depth = 0;
  size_t cut = std::string::npos;
  for (size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] == '(') ++depth;
    else if (inner[i] == ')') --depth;
    else if (inner[i] == ',' && depth == 0) { cut = i; break; }
  }
  if (cut == std::string::npos) throw ValidationError("bad mixed diagram: " + s);
  auto strip_parens = [&](std::string part) {
    part = trimmed(part);
    if (part.size() < 2 || part.front() != '(' || part.back() != ')')
      throw ValidationError("bad mixed diagram: " + s);
    return part.substr(1, part.size() - 2);
  };
  MixedDiagram m;
  m.left = parse_row(strip_parens(inner.substr(0, cut)));
  m.right = parse_row(strip_parens(inner.substr(cut + 1)));
  m.d = d;
  if (!valid_mixed(m)) throw ValidationError("mixed diagram invalid for d=" + std::to_string(d));
  return m;
}

}  // namespace ptp
