#ifndef CAMFAN_SORTABLE_HPP
#define CAMFAN_SORTABLE_HPP

#include <string>
#include <vector>

#include "camfan/coxeter.hpp"

namespace camfan {

/// A reduced word for a Coxeter element: every letter distinct. The support
/// need not be all of S; a word supported on J defines a Coxeter element of
/// the standard parabolic subgroup W_J, and every operation in this header is
/// relative to that subgroup.
class CoxWord {
 public:
  explicit CoxWord(std::vector<GenIndex> letters);

  int size() const { return static_cast<int>(letters_.size()); }
  GenIndex operator[](int i) const { return letters_[i]; }
  const std::vector<GenIndex>& letters() const { return letters_; }
  GenSet support() const { return support_; }
  GenIndex first() const { return letters_.front(); }
  GenIndex last() const { return letters_.back(); }

  /// scs for s the first letter: drop it in front, append it at the end.
  CoxWord rotated_left() const;
  /// scs for s the last letter: move it to the front.
  CoxWord rotated_right() const;
  /// sc for s the first letter: a Coxeter element of W_{<s>}.
  CoxWord without_first() const;
  /// cs for s the last letter.
  CoxWord without_last() const;
  /// A word for c^{-1}.
  CoxWord reversed() const;
  /// Rewrites the word with the (initial) letter s in front. Precondition:
  /// s is initial, i.e. commutes with everything before it.
  CoxWord fronted(const CoxeterGroup& g, GenIndex s) const;

  std::string str(const CoxeterGroup& g) const;

  friend bool operator==(const CoxWord& a, const CoxWord& b) { return a.letters_ == b.letters_; }

 private:
  std::vector<GenIndex> letters_;
  GenSet support_ = 0;
};

ElementId coxeter_element(const CoxeterGroup& g, const CoxWord& c);
bool is_initial_letter(const CoxeterGroup& g, const CoxWord& c, GenIndex s);
bool is_final_letter(const CoxeterGroup& g, const CoxWord& c, GenIndex s);
std::vector<GenIndex> initial_letters(const CoxeterGroup& g, const CoxWord& c);
std::vector<GenIndex> final_letters(const CoxeterGroup& g, const CoxWord& c);

/// Two words name the same Coxeter element iff they are related by swaps of
/// adjacent commuting letters, iff their products agree.
bool same_coxeter_element(const CoxeterGroup& g, const CoxWord& a, const CoxWord& b);
/// Normal form under "swap adjacent commuting letters that are out of order".
CoxWord canonical_commutation_form(const CoxeterGroup& g, const CoxWord& c);
/// One canonical word per Coxeter element of W (full support), sorted.
std::vector<CoxWord> all_coxeter_words(const CoxeterGroup& g);

struct Bipartition {
  GenSet plus = 0, minus = 0;
};
/// Two-colors the Coxeter diagram; NotBipartiteDiagram on an odd cycle.
Bipartition diagram_bipartition(const CoxeterGroup& g);
CoxWord bipartite_word(const CoxeterGroup& g, const Bipartition& bip);
bool is_bipartite_word(const CoxeterGroup& g, const CoxWord& c, const Bipartition& bip);

/// The c-sorting word of w: the leftmost reduced subword of c^inf, recorded
/// with the letter subsets picked up between consecutive dividers.
struct SortingWord {
  std::vector<GenIndex> letters;
  std::vector<GenSet> subsets;  // one per scanned copy of c
  bool nested() const;
  std::string str(const CoxeterGroup& g) const;  // "s0s1|s0"
};

SortingWord sorting_word(const CoxeterGroup& g, const CoxWord& c, ElementId w);
bool is_sortable(const CoxeterGroup& g, const CoxWord& c, ElementId w);
/// Induction on rank and length; used to cross-check is_sortable.
bool is_sortable_recursive(const CoxeterGroup& g, const CoxWord& c, ElementId w);

/// Largest c-sortable element weakly below w.
ElementId pi_down(const CoxeterGroup& g, const CoxWord& c, ElementId w);
/// Smallest c-antisortable element weakly above w.
ElementId pi_up(const CoxeterGroup& g, const CoxWord& c, ElementId w);
/// The dual recursion (on the final letter); used to cross-check pi_up.
ElementId pi_up_recursive(const CoxeterGroup& g, const CoxWord& c, ElementId w);
bool is_antisortable(const CoxeterGroup& g, const CoxWord& c, ElementId w);

std::vector<ElementId> sortable_elements(const CoxeterGroup& g, const CoxWord& c);

/// Z_s: a bijection from c-sortable to scs-sortable elements, s initial in c.
ElementId z_map(const CoxeterGroup& g, const CoxWord& c, GenIndex s, ElementId w);
ElementId z_inverse(const CoxeterGroup& g, const CoxWord& c, GenIndex s, ElementId w);

/// The c-Cambrian congruence: classes, projections and the quotient Hasse
/// diagram. Classes are indexed by their bottoms in ascending ElementId
/// order (the same order sortable_elements uses).
struct CambrianData {
  std::vector<ElementId> sortables;
  std::vector<int> class_of;               // by ElementId; -1 outside W_J
  std::vector<ElementId> tops;             // pi_up of each bottom
  std::vector<std::vector<ElementId>> members;
  std::vector<std::vector<int>> down_covers, up_covers;  // quotient Hasse
  int index_of(ElementId sortable) const { return class_of[sortable]; }
};

CambrianData cambrian_classes(const CoxeterGroup& g, const CoxWord& c);

}  // namespace camfan

#endif
