#pragma once

// The nonempty list bimonad L⁺ on finite sets: monad, comonad, the mixed law
// θ, semigroups as Eilenberg–Moore algebras, the lift V, the left machine
// expansion ρ, L⁺-coalgebras as forests, and the search for θ-entwined
// semigroups. Law checks are bounded-exhaustive; the bounds are arguments.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "duplicial/report.hpp"

namespace duplicial::setlab {

// An element of X (atom ≥ 0) or a nonempty list of nested values.
struct Nested {
  int atom = -1;
  std::vector<Nested> items;

  static Nested of(int x) { return Nested{x, {}}; }
  static Nested list(std::vector<Nested> xs) { return Nested{-1, std::move(xs)}; }
  bool is_atom() const { return atom >= 0; }
  int depth() const;
  int size() const;  // number of atoms
  std::string str() const;
  bool operator==(const Nested& o) const { return atom == o.atom && items == o.items; }
};

using FinList = std::vector<int>;

Nested from_list(const FinList& l);
FinList to_list(const Nested& l);

// Natural in X, so each evaluator applies at any nesting depth.
Nested unit(const Nested& x);      // x ↦ [x]
Nested mult(const Nested& ll);     // concatenation
Nested comult(const Nested& l);    // [x1..xn] ↦ [[x1..xn], [x2..xn], …, [xn]]
Nested counit(const Nested& l);    // [x1..xn] ↦ x1
Nested theta(const Nested& ll);    // the mixed distributive law
Nested fmap(const std::function<Nested(const Nested&)>& f, const Nested& l);

using Theta = std::function<Nested(const Nested&)>;

// Σ n_i (m − i + 1) for [[n_1 items], …, [n_m items]].
long theta_length(const Nested& ll);

// All values of the given depth over {0..k−1} with 1..max_size atoms, by
// increasing size.
std::vector<Nested> enumerate(int k, int depth, int max_size);

// Monad, comonad and mixed-law axioms, the compatibility square
// Δ∘μ = L⁺μ ∘ θL⁺ ∘ L⁺Δ and the unit/counit conditions, over all inputs with
// at most `size_bound` atoms on a carrier of size k. The first failure of
// each law carries the smallest witness.
Report check_bimonad(int k, int size_bound, const Theta& th = theta);

// ---------------------------------------------------------------------------
// Semigroups

struct SemigroupTable {
  int n = 0;
  std::vector<int> op;  // op[a * n + b] = ab
  int operator()(int a, int b) const { return op[a * n + b]; }
};

// First non-associative triple, if any.
std::optional<std::array<int, 3>> associativity_witness(const SemigroupTable& t);

// Throws ValidationError with the witness triple for a non-associative table.
void require_associative(const SemigroupTable& t);

// Eilenberg–Moore structure: [x1..xn] ↦ x1⋯xn, folded left to right.
int fold(const SemigroupTable& t, const FinList& l);

// Product of VX: [x1..xm][y1..yn] = [x1y1, …, xmy1, y1, …, yn], for any
// semigroup given by its product on elements.
Nested v_product(const std::function<Nested(const Nested&, const Nested&)>& op, const Nested& a, const Nested& b);
FinList lift_v(const SemigroupTable& t, const FinList& a, const FinList& b);

// ρ[x1..xn] = [x1⋯xn, x2⋯xn, …, xn].
FinList rho_left_machine(const SemigroupTable& t, const FinList& l);

// χ_M: TVM -> VTM, the semigroup map out of the free semigroup on VM sending
// [x1..xk] to [[x1], …, [xk]] in V of the free semigroup on M.
Nested chi(const Nested& lists);

// EM laws of the fold, associativity of lift_v (triples of total length
// ≤ max_len), agreement of lift_v with Cα∘θ, ρ a map of semigroups TM -> VM,
// and both χ-coalgebra diagrams for ρ on lists of length ≤ max_len.
Report check_semigroup_structures(const SemigroupTable& t, int max_len);

// ---------------------------------------------------------------------------
// Forests and the entwining search

// pred[x] = −1 for a root.
using Forest = std::vector<int>;

// β(x) = [x, pred(x), pred²(x), …]; nullopt when pred has a cycle.
std::optional<std::vector<FinList>> beta_of(const Forest& f);
std::vector<Forest> enumerate_forests(int n);

// L⁺-coalgebra laws ε∘β = id and Δ∘β = L⁺β∘β.
bool is_coalgebra(const std::vector<FinList>& beta);

// Every map β: X -> L⁺X with lists of length ≤ n + 1 that satisfies the
// coalgebra laws, for comparison with enumerate_forests.
std::vector<std::vector<FinList>> enumerate_coalgebras(int n);

// β∘α = Cα∘θ∘Bβ on [x, y], i.e. β(xy) = β(x)·β(y) in VT.
bool is_entwined(const SemigroupTable& t, const std::vector<FinList>& beta);
// The variant β(xy) = [xy, xy1, …, xyn, y, y1, …, yn], in which x multiplies
// the tail of β(y).
bool is_entwined_variant(const SemigroupTable& t, const std::vector<FinList>& beta);

// Labeled semigroups on {0..n−1} by backtracking with associativity pruning,
// sharded over threads by the first table entry.
std::vector<SemigroupTable> enumerate_semigroups(int n, int threads);
// Independent count: all n^{n²} tables through associativity_witness.
std::int64_t count_semigroups_bruteforce(int n);

struct EntwinedSearch {
  int n = 0;
  std::int64_t semigroups = 0;
  std::int64_t semigroups_bruteforce = -1;  // −1 when not run
  std::int64_t forests = 0;
  std::int64_t entwined = 0;            // θ-derived condition
  std::int64_t entwined_variant = 0;  // the variant condition
  std::vector<std::string> witnesses;   // one per semigroup, up to a limit
};

// Threads from DUPLICIAL_THREADS, else the hardware concurrency.
int default_threads();

EntwinedSearch search_entwined(int n, int threads = default_threads(), bool bruteforce = true,
                               int witness_limit = 8);

}  // namespace duplicial::setlab
