#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ptp/rational.hpp"

namespace ptp {

// Perfect matching on 2(p+q) nodes: top row 1..p+q above, bottom row below,
// wall between positions p and p+1 in both rows. Edges joining opposite rows
// stay on one side of the wall; edges inside one row must cross it.
// Node ids: 0..n-1 are top_1..top_n, n..2n-1 are bot_1..bot_n.
struct BrauerDiagram {
  int p = 0, q = 0;
  std::vector<std::pair<int, int>> edges;  // canonical: each pair sorted, list sorted

  int n() const { return p + q; }
  int top(int pos) const { return pos - 1; }       // 1-based position
  int bot(int pos) const { return n() + pos - 1; }

  static BrauerDiagram identity(int p, int q);
  void canonicalize();

  friend bool operator==(const BrauerDiagram&, const BrauerDiagram&) = default;
  friend auto operator<=>(const BrauerDiagram&, const BrauerDiagram&) = default;
};

bool valid_diagram(const BrauerDiagram& a);

// sigma_i: adjacent transposition for i != p, the wall contraction for i == p
BrauerDiagram generator(int i, int p, int q);
// transposition (i k) with both positions on the same side of the wall
BrauerDiagram transposition(int i, int k, int p, int q);
// contraction joining top_i to top_k and bot_i to bot_k across the wall
BrauerDiagram contraction(int i, int k, int p, int q);

// product ab (b applied first): returns the resulting diagram and the number
// of closed loops erased, each contributing a factor d
std::pair<BrauerDiagram, int> compose(const BrauerDiagram& a, const BrauerDiagram& b);
// compose the generator word left to right; word[j] in [1, p+q-1]
std::pair<BrauerDiagram, int> compose_word(const std::vector<int>& word, int p, int q);

std::vector<BrauerDiagram> all_diagrams(int p, int q);

struct DiagramCombo {
  int p = 0, q = 0;
  std::map<BrauerDiagram, Rat> terms;

  DiagramCombo() = default;
  DiagramCombo(int p_, int q_) : p(p_), q(q_) {}
  void add(const BrauerDiagram& a, const Rat& coeff);
};

// Jucys-Murphy element J_k, 1 <= k <= p+q. The constant term sits on the
// identity diagram. J_1 vanishes except in the p = 0 tower, where the
// wall-corrected branch applies from k = 1 on.
DiagramCombo jm_element(int k, int p, int q, int d);

// generator word whose composition reproduces the diagram up to the tracked
// loop factor; length O((p+q)^2)
std::vector<int> diagram_to_generators(const BrauerDiagram& a);

// nested wall contraction of depth k and its generator word
BrauerDiagram nested_contraction(int k, int p, int q);
std::vector<int> nested_contraction_word(int k, int p);

// text format "p q | t1:b1 t2:t3 b2:b3"
std::string format_diagram(const BrauerDiagram& a);
BrauerDiagram parse_diagram(const std::string& s);

// defining relations as word identities lhs == d^dpow * rhs
struct Relation {
  std::string name;
  std::vector<int> lhs, rhs;
  int dpow = 0;
};
std::vector<Relation> defining_relations(int p, int q);

}  // namespace ptp
