#include "ptp/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ptp {

namespace {

bool is_top(const BrauerDiagram& a, int node) { return node < a.n(); }

int position(const BrauerDiagram& a, int node) {
  return is_top(a, node) ? node + 1 : node - a.n() + 1;
}

bool left_of_wall(const BrauerDiagram& a, int node) { return position(a, node) <= a.p; }

// bubble-sorts g to the identity, recording the adjacent swaps; composing the
// recorded generators left to right rebuilds the permutation diagram of g
std::vector<int> permutation_word(std::vector<int> g, int lo, int hi) {
  std::vector<int> word;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = lo; i < hi; ++i) {
      if (g[i - 1] > g[i]) {
        std::swap(g[i - 1], g[i]);
        word.push_back(i);
        moved = true;
      }
    }
  }
  return word;
}

}  // namespace

BrauerDiagram BrauerDiagram::identity(int p, int q) {
  BrauerDiagram a{p, q, {}};
  for (int i = 1; i <= p + q; ++i) a.edges.emplace_back(a.top(i), a.bot(i));
  a.canonicalize();
  return a;
}

void BrauerDiagram::canonicalize() {
  for (auto& e : edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(edges.begin(), edges.end());
}

bool valid_diagram(const BrauerDiagram& a) {
  if (a.p < 0 || a.q < 0 || a.n() <= 0) return false;
  if (static_cast<int>(a.edges.size()) != a.n()) return false;
  std::vector<int> deg(2 * a.n(), 0);
  for (const auto& [u, v] : a.edges) {
    if (u < 0 || v < 0 || u >= 2 * a.n() || v >= 2 * a.n() || u == v) return false;
    ++deg[u];
    ++deg[v];
    const bool same_row = is_top(a, u) == is_top(a, v);
    const bool same_side = left_of_wall(a, u) == left_of_wall(a, v);
    if (same_row ? same_side : !same_side) return false;
  }
  return std::all_of(deg.begin(), deg.end(), [](int x) { return x == 1; });
}

BrauerDiagram generator(int i, int p, int q) {
  const int n = p + q;
  if (i < 1 || i >= n) throw ValidationError("generator index out of range");
  BrauerDiagram a{p, q, {}};
  for (int j = 1; j <= n; ++j) {
    if (j == i || j == i + 1) continue;
    a.edges.emplace_back(a.top(j), a.bot(j));
  }
  if (i == p) {
    a.edges.emplace_back(a.top(i), a.top(i + 1));
    a.edges.emplace_back(a.bot(i), a.bot(i + 1));
  } else {
    a.edges.emplace_back(a.top(i), a.bot(i + 1));
    a.edges.emplace_back(a.top(i + 1), a.bot(i));
  }
  a.canonicalize();
  return a;
}

BrauerDiagram transposition(int i, int k, int p, int q) {
  const int n = p + q;
  if (i == k || i < 1 || k < 1 || i > n || k > n)
    throw ValidationError("transposition positions out of range");
  if ((i <= p) != (k <= p)) throw ValidationError("transposition must not cross the wall");
  BrauerDiagram a{p, q, {}};
  for (int j = 1; j <= n; ++j) {
    if (j == i || j == k) continue;
    a.edges.emplace_back(a.top(j), a.bot(j));
  }
  a.edges.emplace_back(a.top(i), a.bot(k));
  a.edges.emplace_back(a.top(k), a.bot(i));
  a.canonicalize();
  return a;
}

BrauerDiagram contraction(int i, int k, int p, int q) {
  const int n = p + q;
  if (i < 1 || k < 1 || i > n || k > n) throw ValidationError("contraction positions out of range");
  if ((i <= p) == (k <= p)) throw ValidationError("contraction must cross the wall");
  BrauerDiagram a{p, q, {}};
  for (int j = 1; j <= n; ++j) {
    if (j == i || j == k) continue;
    a.edges.emplace_back(a.top(j), a.bot(j));
  }
  a.edges.emplace_back(a.top(i), a.top(k));
  a.edges.emplace_back(a.bot(i), a.bot(k));
  a.canonicalize();
  return a;
}

std::pair<BrauerDiagram, int> compose(const BrauerDiagram& a, const BrauerDiagram& b) {
  if (a.p != b.p || a.q != b.q) throw ValidationError("composing diagrams of different shape");
  const int n = a.n();
  // glued node ids: 0..n-1 final top, n..2n-1 internal, 2n..3n-1 final bottom
  std::vector<std::vector<int>> adj(3 * n);
  auto link = [&adj](int u, int v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  };
  for (const auto& [u, v] : a.edges) link(u, v);
  for (const auto& [u, v] : b.edges) link(u + n, v + n);

  BrauerDiagram out{a.p, a.q, {}};
  std::vector<char> seen(3 * n, 0);
  auto external = [n](int u) { return u < n || u >= 2 * n; };
  auto walk = [&](int start) {
    int prev = -1, cur = start;
    seen[cur] = 1;
    while (true) {
      int next = (adj[cur][0] != prev || adj[cur].size() == 1) ? adj[cur][0] : adj[cur][1];
      prev = cur;
      cur = next;
      seen[cur] = 1;
      if (external(cur)) return cur;
    }
  };
  auto out_node = [n](int glued) { return glued < n ? glued : glued - n; };
  for (int u = 0; u < 3 * n; ++u) {
    if (!external(u) || seen[u]) continue;
    out.edges.emplace_back(out_node(u), out_node(walk(u)));
  }
  int loops = 0;
  for (int u = n; u < 2 * n; ++u) {
    if (seen[u]) continue;
    ++loops;
    int prev = u, cur = adj[u][0];
    seen[u] = 1;
    while (cur != u) {
      seen[cur] = 1;
      int next = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
      prev = cur;
      cur = next;
    }
  }
  out.canonicalize();
  return {out, loops};
}

std::pair<BrauerDiagram, int> compose_word(const std::vector<int>& word, int p, int q) {
  BrauerDiagram acc = BrauerDiagram::identity(p, q);
  int loops = 0;
  for (int i : word) {
    auto [next, l] = compose(acc, generator(i, p, q));
    acc = std::move(next);
    loops += l;
  }
  return {acc, loops};
}

std::vector<BrauerDiagram> all_diagrams(int p, int q) {
  const int n = p + q;
  std::vector<BrauerDiagram> out;
  BrauerDiagram cur{p, q, {}};
  std::vector<char> used(2 * n, 0);
  auto rec = [&](auto&& self) -> void {
    int u = 0;
    while (u < 2 * n && used[u]) ++u;
    if (u == 2 * n) {
      BrauerDiagram done = cur;
      done.canonicalize();
      out.push_back(std::move(done));
      return;
    }
    used[u] = 1;
    for (int v = u + 1; v < 2 * n; ++v) {
      if (used[v]) continue;
      const bool same_row = is_top(cur, u) == is_top(cur, v);
      const bool same_side = left_of_wall(cur, u) == left_of_wall(cur, v);
      if (same_row ? same_side : !same_side) continue;
      used[v] = 1;
      cur.edges.emplace_back(u, v);
      self(self);
      cur.edges.pop_back();
      used[v] = 0;
    }
    used[u] = 0;
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

void DiagramCombo::add(const BrauerDiagram& a, const Rat& coeff) {
  if (a.p != p || a.q != q) throw ValidationError("combo term of different shape");
  auto it = terms.find(a);
  if (it == terms.end()) {
    if (coeff != 0) terms.emplace(a, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms.erase(it);
}

DiagramCombo jm_element(int k, int p, int q, int d) {
  const int n = p + q;
  if (k < 1 || k > n) throw ValidationError("Jucys-Murphy index out of range");
  DiagramCombo out(p, q);
  if (k == 1 && p >= 1) return out;
  if (k <= p) {
    for (int i = 1; i < k; ++i) out.add(transposition(i, k, p, q), 1);
    return out;
  }
  for (int i = p + 1; i < k; ++i) out.add(transposition(i, k, p, q), 1);
  for (int i = 1; i <= p; ++i) out.add(contraction(i, k, p, q), -1);
  out.add(BrauerDiagram::identity(p, q), d);
  return out;
}

BrauerDiagram nested_contraction(int k, int p, int q) {
  const int n = p + q;
  if (k < 1 || k > std::min(p, q)) throw ValidationError("contraction depth out of range");
  BrauerDiagram a{p, q, {}};
  for (int m = 1; m <= k; ++m) {
    a.edges.emplace_back(a.top(p - m + 1), a.top(p + m));
    a.edges.emplace_back(a.bot(p - m + 1), a.bot(p + m));
  }
  for (int j = 1; j <= n; ++j)
    if (j <= p - k || j > p + k) a.edges.emplace_back(a.top(j), a.bot(j));
  a.canonicalize();
  return a;
}

std::vector<int> nested_contraction_word(int k, int p) {
  std::vector<int> word;
  for (int j = k - 1; j >= 1; --j) {
    word.push_back(p);
    for (int i = p + 1; i <= p + j; ++i) word.push_back(i);
    for (int i = p - 1; i >= p - j; --i) word.push_back(i);
  }
  word.push_back(p);
  return word;
}

std::vector<int> diagram_to_generators(const BrauerDiagram& a) {
  if (!valid_diagram(a)) throw ValidationError("invalid diagram");
  const int n = a.n(), p = a.p;
  std::vector<std::pair<int, int>> cups, caps;  // positions, cross the wall
  std::vector<int> through(n + 1, 0);           // top position -> bottom position
  for (const auto& [u, v] : a.edges) {
    const bool ut = is_top(a, u), vt = is_top(a, v);
    if (ut && vt)
      cups.emplace_back(position(a, u), position(a, v));
    else if (!ut && !vt)
      caps.emplace_back(position(a, u), position(a, v));
    else
      through[position(a, ut ? u : v)] = position(a, ut ? v : u);
  }
  for (auto& c : cups)
    if (c.first > c.second) std::swap(c.first, c.second);
  for (auto& c : caps)
    if (c.first > c.second) std::swap(c.first, c.second);
  const int k = static_cast<int>(cups.size());

  // route the diagram as (top permutation) * (nested contraction) * (bottom
  // permutation); gu maps top positions to contraction slots, gv maps slots
  // to bottom positions
  std::sort(cups.begin(), cups.end(), std::greater<>());
  std::sort(caps.begin(), caps.end(), std::greater<>());
  std::vector<int> gu(n + 1, 0), gv(n + 1, 0);
  for (int m = 1; m <= k; ++m) {
    gu[cups[m - 1].first] = p - m + 1;
    gu[cups[m - 1].second] = p + m;
    gv[p - m + 1] = caps[m - 1].first;
    gv[p + m] = caps[m - 1].second;
  }
  int left_slot = 1, right_slot = p + k + 1;
  for (int t = 1; t <= n; ++t) {
    if (through[t] == 0) continue;
    int& slot = t <= p ? left_slot : right_slot;
    gu[t] = slot;
    gv[slot] = through[t];
    ++slot;
  }

  auto one_based = [n](std::vector<int> g) {
    std::vector<int> full(n);
    for (int i = 1; i <= n; ++i) full[i - 1] = g[i];
    return full;
  };
  std::vector<int> u = one_based(gu), v = one_based(gv), word;
  auto append = [&word](const std::vector<int>& part) {
    word.insert(word.end(), part.begin(), part.end());
  };
  append(permutation_word(u, 1, p));
  append(permutation_word(u, p + 1, n));
  if (k > 0) append(nested_contraction_word(k, p));
  append(permutation_word(v, 1, p));
  append(permutation_word(v, p + 1, n));
  return word;
}

std::string format_diagram(const BrauerDiagram& a) {
  std::ostringstream os;
  os << a.p << ' ' << a.q << " |";
  auto tag = [&a](int node) {
    return (is_top(a, node) ? "t" : "b") + std::to_string(position(a, node));
  };
  for (const auto& [u, v] : a.edges) os << ' ' << tag(u) << ':' << tag(v);
  return os.str();
}

BrauerDiagram parse_diagram(const std::string& s) {
  const auto bar = s.find('|');
  if (bar == std::string::npos) throw ValidationError("diagram text needs 'p q | edges'");
  std::istringstream head(s.substr(0, bar));
  BrauerDiagram a;
  if (!(head >> a.p >> a.q) || a.p < 0 || a.q < 0 || a.n() <= 0)
    throw ValidationError("bad diagram header: " + s);
  auto node = [&a](const std::string& t) {
    if (t.size() < 2 || (t[0] != 't' && t[0] != 'b'))
      throw ValidationError("bad diagram endpoint: " + t);
    int pos = 0;
    try {
      pos = std::stoi(t.substr(1));
    } catch (const std::exception&) {
      throw ValidationError("bad diagram endpoint: " + t);
    }
    if (pos < 1 || pos > a.n()) throw ValidationError("diagram endpoint out of range: " + t);
    return t[0] == 't' ? a.top(pos) : a.bot(pos);
  };
  std::istringstream body(s.substr(bar + 1));
  std::string item;
  while (body >> item) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ValidationError("bad diagram edge: " + item);
    a.edges.emplace_back(node(item.substr(0, colon)), node(item.substr(colon + 1)));
  }
  a.canonicalize();
  if (!valid_diagram(a)) throw ValidationError("diagram text is not a valid diagram: " + s);
  return a;
}

std::vector<Relation> defining_relations(int p, int q) {
  const int n = p + q;
  std::vector<Relation> out;
  auto name = [](const char* base, int i, int j = -1) {
    std::string s = base;
    s += "(" + std::to_string(i);
    if (j >= 0) s += "," + std::to_string(j);
    return s + ")";
  };
  for (int i = 1; i < n; ++i) {
    if (i != p) out.push_back({name("involution", i), {i, i}, {}, 0});
  }
  for (int i = 1; i + 1 < n; ++i) {
    if (i == p - 1 || i == p) continue;
    out.push_back({name("braid", i), {i, i + 1, i}, {i + 1, i, i + 1}, 0});
  }
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j) {
      const char* base = (i == p || j == p) ? "wall_commute" : "commute";
      out.push_back({name(base, i, j), {i, j}, {j, i}, 0});
    }
  if (p >= 1 && q >= 1) out.push_back({"wall_idempotent", {p, p}, {p}, 1});
  if (p >= 1 && q >= 2) out.push_back({"wall_absorb_right", {p, p + 1, p}, {p}, 0});
  if (p >= 2 && q >= 1) out.push_back({"wall_absorb_left", {p, p - 1, p}, {p}, 0});
  if (p >= 2 && q >= 2) {
    out.push_back({"wall_braid_a",
                   {p, p + 1, p - 1, p, p - 1},
                   {p, p + 1, p - 1, p, p + 1},
                   0});
    out.push_back({"wall_braid_b",
                   {p - 1, p, p + 1, p - 1, p},
                   {p + 1, p, p + 1, p - 1, p},
                   0});
  }
  return out;
}

}  // namespace ptp
