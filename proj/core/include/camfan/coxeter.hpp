#ifndef CAMFAN_COXETER_HPP
#define CAMFAN_COXETER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "camfan/linalg.hpp"
#include "camfan/scalar.hpp"

namespace camfan {

using ElementId = std::uint32_t;
using GenIndex = int;
/// Bitmask over the simple generators (rank is capped at 31 by the cap on |W|
/// long before this matters).
using GenSet = std::uint32_t;

inline constexpr ElementId kNoElement = 0xffffffffu;

inline bool gen_in(GenSet J, GenIndex s) { return (J >> s) & 1u; }
inline GenSet gen_insert(GenSet J, GenIndex s) { return J | (1u << s); }
inline GenSet gen_erase(GenSet J, GenIndex s) { return J & ~(1u << s); }
inline GenSet full_gen_set(int n) { return (n >= 32) ? ~0u : ((1u << n) - 1u); }
std::vector<GenIndex> gen_list(GenSet J);

/// Signed index into the positive-root table: r >= 0 denotes the positive
/// root with index r, and ~r denotes its negative.
using SignedRoot = std::int32_t;
inline SignedRoot negate_root(SignedRoot r) { return ~r; }
inline bool root_is_positive(SignedRoot r) { return r >= 0; }
inline int root_abs(SignedRoot r) { return r >= 0 ? r : ~r; }

/// Fixed-capacity bitset keyed by reflection index; inversion sets.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : n_(nbits), w_((nbits + 63) / 64, 0) {}

  int size_bits() const { return n_; }
  void set(int i) { w_[i >> 6] |= (1ull << (i & 63)); }
  void reset(int i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
  void flip(int i) { w_[i >> 6] ^= (1ull << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  int count() const;
  bool none() const;
  bool subset_of(const Bitset& o) const;
  Bitset& operator&=(const Bitset& o);
  Bitset& operator|=(const Bitset& o);
  Bitset complement() const;
  std::vector<int> bits() const;
  std::size_t hash() const;
  friend bool operator==(const Bitset& x, const Bitset& y) { return x.n_ == y.n_ && x.w_ == y.w_; }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

struct BuildOptions {
  /// Enumeration guard: exceeding it reports NonFiniteType.
  std::size_t element_cap = 200000;
};

/// A finite Coxeter group together with its exact root-system geometry, the
/// full element table and the weak order. Immutable once built; every method
/// is a pure read and safe under unrestricted concurrent use.
///
/// Elements are handles (ElementId) into an internal table ordered by length
/// (id 0 is the identity, the last id is w0). Each element stores its signed
/// permutation of the positive roots, its length and its inversion set.
class CoxeterGroup {
 public:
  static CoxeterGroup build(const std::vector<std::vector<int>>& coxeter_matrix,
                            std::vector<std::string> labels = {}, BuildOptions opts = {});

  // --- presentation
  int rank() const { return n_; }
  int radicand() const { return radicand_; }
  int bond(GenIndex s, GenIndex t) const { return matrix_[s][t]; }
  const std::vector<std::vector<int>>& coxeter_matrix() const { return matrix_; }
  const std::string& label(GenIndex s) const { return labels_[s]; }
  std::optional<GenIndex> gen_by_label(const std::string& name) const;
  bool crystallographic() const { return crystallographic_; }

  // --- exact geometry (coordinates in the simple-root basis)
  const Mat& form() const { return form_; }
  const Mat& cartan() const { return cartan_; }
  /// d with d_i * A_ij symmetric; equals B(a_i,a_i)/2.
  const Vec& symmetrizer() const { return symmetrizer_; }
  Scalar form_apply(const Vec& x, const Vec& y) const;
  /// <x, beta_t^v> = 2 B(x, beta_t) / B(beta_t, beta_t)
  Scalar pair_with_coroot(const Vec& x, int t) const;
  const Vec& fundamental_weight(GenIndex s) const { return weights_[s]; }
  /// Orthogonal projection onto span{alpha_j : j in J}, realizing the
  /// quotient map V -> V / I_J onto V(W_J).
  Vec proj_parabolic(GenSet J, const Vec& v) const;

  // --- roots and reflections (reflection t <-> positive root t)
  int num_pos_roots() const { return static_cast<int>(pos_roots_.size()); }
  const Vec& pos_root(int t) const { return pos_roots_[t]; }
  Vec root_vec(SignedRoot r) const;
  std::optional<SignedRoot> root_index(const Vec& v) const;
  Vec coroot(int t) const;
  GenSet root_support(int t) const { return root_support_[t]; }
  SignedRoot gen_action(GenIndex s, SignedRoot r) const;
  ElementId reflection(int t) const { return reflection_elt_[t]; }
  std::optional<int> reflection_index(ElementId w) const;
  std::string reflection_name(int t) const;

  // --- elements
  std::size_t order() const { return elts_.size(); }
  ElementId identity() const { return 0; }
  ElementId longest() const { return static_cast<ElementId>(elts_.size() - 1); }
  int length(ElementId w) const { return elts_[w].length; }
  const Bitset& inversions(ElementId w) const { return elts_[w].inv; }
  ElementId right_mult(ElementId w, GenIndex s) const { return right_[w * n_ + s]; }
  ElementId left_mult(GenIndex s, ElementId w) const { return left_[w * n_ + s]; }
  ElementId mult(ElementId u, ElementId w) const;
  ElementId inverse(ElementId w) const;
  /// w * w0 via I(w w0) = T \ I(w).
  ElementId mult_w0(ElementId w) const;
  SignedRoot act(ElementId w, SignedRoot r) const;
  Vec act_vec(ElementId w, const Vec& v) const;

  bool is_right_descent(ElementId w, GenIndex s) const { return !root_is_positive(elts_[w].perm[s]); }
  bool is_left_descent(ElementId w, GenIndex s) const { return elts_[w].inv.test(s); }
  GenSet descent_set(ElementId w) const;
  GenSet ascent_set(ElementId w) const { return descent_set(w) ^ full_gen_set(n_); }
  int num_descents(ElementId w) const;
  /// Reflection indices {w s w^-1 : s a right descent of w}; one per element
  /// covered by w.
  std::vector<int> cover_reflections(ElementId w) const;

  // --- weak order
  bool leq(ElementId u, ElementId w) const { return elts_[u].inv.subset_of(elts_[w].inv); }
  ElementId join(ElementId u, ElementId w) const;
  ElementId meet(ElementId u, ElementId w) const;
  std::vector<ElementId> weak_up_covers(ElementId w) const;
  std::vector<ElementId> weak_down_covers(ElementId w) const;

  // --- parabolic structure
  /// Reflections lying in W_J (their roots are supported on J).
  Bitset reflection_mask(GenSet J) const;
  bool in_parabolic(ElementId w, GenSet J) const;
  /// The factor w_J of w = w_J * (J^w); I(w_J) = I(w) ∩ W_J.
  ElementId parabolic_part(ElementId w, GenSet J) const;
  ElementId parabolic_remainder(ElementId w, GenSet J) const;

  // --- words and lookup
  ElementId from_word(std::span<const GenIndex> word) const;
  /// Lexicographically least reduced word (leftmost-smallest left descents).
  std::vector<GenIndex> canonical_word(ElementId w) const;
  std::string word_str(ElementId w) const;
  std::optional<ElementId> by_inversions(const Bitset& inv) const;

 private:
  struct Elt {
    std::vector<SignedRoot> perm;  // images of the positive roots
    Bitset inv;
    int length = 0;
  };

  Bitset inversions_from_perm(const std::vector<SignedRoot>& perm) const;
  ElementId lookup_perm(const std::vector<SignedRoot>& perm) const;

  int n_ = 0;
  int radicand_ = 0;
  bool crystallographic_ = true;
  std::vector<std::vector<int>> matrix_;
  std::vector<std::string> labels_;
  Mat form_, cartan_;
  Vec symmetrizer_;
  std::vector<Vec> weights_;

  std::vector<Vec> pos_roots_;
  std::map<Vec, int, bool (*)(const Vec&, const Vec&)> root_lookup_{&CoxeterGroup::vec_less_};
  std::vector<GenSet> root_support_;
  std::vector<std::vector<SignedRoot>> gen_act_;  // [s][t]
  std::vector<ElementId> reflection_elt_;
  std::unordered_map<ElementId, int> reflection_of_elt_;

  std::vector<Elt> elts_;
  std::vector<ElementId> right_, left_;  // [w * n + s]
  std::unordered_map<Bitset, ElementId, BitsetHash> index_;

  static bool vec_less_(const Vec& x, const Vec& y) { return vec_compare(x, y) < 0; }
};

}  // namespace camfan

#endif
