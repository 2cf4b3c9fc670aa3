#include "camfan/sortable.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "camfan/errors.hpp"

namespace camfan {

CoxWord::CoxWord(std::vector<GenIndex> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) fail(Errc::UsageError, "empty Coxeter word");
  for (GenIndex s : letters_) {
    if (s < 0 || s > 31) fail(Errc::UsageError, "generator index out of range");
    if (gen_in(support_, s)) fail(Errc::UsageError, "Coxeter word repeats a generator");
    support_ = gen_insert(support_, s);
  }
}

CoxWord CoxWord::rotated_left() const {
  std::vector<GenIndex> v(letters_.begin() + 1, letters_.end());
  v.push_back(letters_.front());
  return CoxWord(v);
}

CoxWord CoxWord::rotated_right() const {
  std::vector<GenIndex> v;
  v.push_back(letters_.back());
  v.insert(v.end(), letters_.begin(), letters_.end() - 1);
  return CoxWord(v);
}

CoxWord CoxWord::without_first() const {
  return CoxWord(std::vector<GenIndex>(letters_.begin() + 1, letters_.end()));
}

CoxWord CoxWord::without_last() const {
  return CoxWord(std::vector<GenIndex>(letters_.begin(), letters_.end() - 1));
}

CoxWord CoxWord::reversed() const {
  return CoxWord(std::vector<GenIndex>(letters_.rbegin(), letters_.rend()));
}

CoxWord CoxWord::fronted(const CoxeterGroup& g, GenIndex s) const {
  if (!is_initial_letter(g, *this, s)) fail(Errc::NotInitial, g.label(s) + " is not initial");
  std::vector<GenIndex> v{s};
  for (GenIndex t : letters_)
    if (t != s) v.push_back(t);
  return CoxWord(v);
}

std::string CoxWord::str(const CoxeterGroup& g) const {
  std::string out;
  for (GenIndex s : letters_) out += g.label(s);
  return out;
}

ElementId coxeter_element(const CoxeterGroup& g, const CoxWord& c) {
  return g.from_word(c.letters());
}

bool is_initial_letter(const CoxeterGroup& g, const CoxWord& c, GenIndex s) {
  for (GenIndex t : c.letters()) {
    if (t == s) return true;
    if (g.bond(t, s) != 2) return false;
  }
  return false;
}

bool is_final_letter(const CoxeterGroup& g, const CoxWord& c, GenIndex s) {
  for (auto it = c.letters().rbegin(); it != c.letters().rend(); ++it) {
    if (*it == s) return true;
    if (g.bond(*it, s) != 2) return false;
  }
  return false;
}

std::vector<GenIndex> initial_letters(const CoxeterGroup& g, const CoxWord& c) {
  std::vector<GenIndex> v;
  for (GenIndex s : gen_list(c.support()))
    if (is_initial_letter(g, c, s)) v.push_back(s);
  return v;
}

std::vector<GenIndex> final_letters(const CoxeterGroup& g, const CoxWord& c) {
  std::vector<GenIndex> v;
  for (GenIndex s : gen_list(c.support()))
    if (is_final_letter(g, c, s)) v.push_back(s);
  return v;
}

bool same_coxeter_element(const CoxeterGroup& g, const CoxWord& a, const CoxWord& b) {
  return a.support() == b.support() && coxeter_element(g, a) == coxeter_element(g, b);
}

CoxWord canonical_commutation_form(const CoxeterGroup& g, const CoxWord& c) {
  std::vector<GenIndex> v = c.letters();
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] > v[i + 1] && g.bond(v[i], v[i + 1]) == 2) {
        std::swap(v[i], v[i + 1]);
        changed = true;
      }
    }
  }
  return CoxWord(v);
}

std::vector<CoxWord> all_coxeter_words(const CoxeterGroup& g) {
  int n = g.rank();
  if (n > 8) fail(Errc::UsageError, "Coxeter-element enumeration is limited to rank 8");
  std::vector<GenIndex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::map<ElementId, std::vector<GenIndex>> reps;
  do {
    ElementId e = g.from_word(perm);
    auto it = reps.find(e);
    if (it == reps.end() || perm < it->second) reps[e] = perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<CoxWord> out;
  out.reserve(reps.size());
  for (auto& [e, word] : reps) out.emplace_back(word);
  std::sort(out.begin(), out.end(),
            [](const CoxWord& a, const CoxWord& b) { return a.letters() < b.letters(); });
  return out;
}

Bipartition diagram_bipartition(const CoxeterGroup& g) {
  int n = g.rank();
  std::vector<int> color(n, -1);
  Bipartition bip;
  for (int start = 0; start < n; ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    std::vector<int> queue{start};
    for (size_t h = 0; h < queue.size(); ++h) {
      int u = queue[h];
      for (int v = 0; v < n; ++v) {
        if (v == u || g.bond(u, v) == 2) continue;
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          fail(Errc::NotBipartiteDiagram, "Coxeter diagram has an odd cycle");
        }
      }
    }
  }
  for (int s = 0; s < n; ++s)
    (color[s] == 0 ? bip.plus : bip.minus) = gen_insert(color[s] == 0 ? bip.plus : bip.minus, s);
  return bip;
}

CoxWord bipartite_word(const CoxeterGroup& g, const Bipartition& bip) {
  if ((bip.plus | bip.minus) != full_gen_set(g.rank()) || (bip.plus & bip.minus))
    fail(Errc::UsageError, "bipartition must partition the generators");
  for (GenIndex s : gen_list(bip.plus))
    for (GenIndex t : gen_list(bip.plus))
      if (s < t && g.bond(s, t) != 2) fail(Errc::NotBipartiteDiagram, "edge inside S+");
  for (GenIndex s : gen_list(bip.minus))
    for (GenIndex t : gen_list(bip.minus))
      if (s < t && g.bond(s, t) != 2) fail(Errc::NotBipartiteDiagram, "edge inside S-");
  std::vector<GenIndex> v = gen_list(bip.plus);
  for (GenIndex s : gen_list(bip.minus)) v.push_back(s);
  return CoxWord(v);
}

bool is_bipartite_word(const CoxeterGroup& g, const CoxWord& c, const Bipartition& bip) {
  if (c.support() != full_gen_set(g.rank())) return false;
  return same_coxeter_element(g, c, bipartite_word(g, bip));
}

bool SortingWord::nested() const {
  for (size_t i = 0; i + 1 < subsets.size(); ++i)
    if (subsets[i + 1] & ~subsets[i]) return false;
  return true;
}

std::string SortingWord::str(const CoxeterGroup& g) const {
  std::string out;
  size_t k = 0;
  for (size_t i = 0; i < subsets.size(); ++i) {
    if (i) out += "|";
    int cnt = __builtin_popcount(subsets[i]);
    for (int j = 0; j < cnt; ++j) out += g.label(letters[k++]);
  }
  return out;
}

SortingWord sorting_word(const CoxeterGroup& g, const CoxWord& c, ElementId w) {
  if (!g.in_parabolic(w, c.support()))
    fail(Errc::UsageError, "element lies outside the parabolic subgroup of the word");
  SortingWord out;
  ElementId u = w;
  while (u != g.identity()) {
    GenSet taken = 0;
    for (GenIndex s : c.letters()) {
      if (g.is_left_descent(u, s)) {
        out.letters.push_back(s);
        taken = gen_insert(taken, s);
        u = g.left_mult(s, u);
      }
    }
    if (taken == 0) fail(Errc::Internal, "sorting word made no progress");
    out.subsets.push_back(taken);
  }
  return out;
}

bool is_sortable(const CoxeterGroup& g, const CoxWord& c, ElementId w) {
  if (!g.in_parabolic(w, c.support())) return false;
  return sorting_word(g, c, w).nested();
}

bool is_sortable_recursive(const CoxeterGroup& g, const CoxWord& c, ElementId w) {
  if (w == g.identity()) return true;
  GenIndex s = c.first();
  if (g.is_left_descent(w, s)) return is_sortable_recursive(g, c.rotated_left(), g.left_mult(s, w));
  if (c.size() == 1) return false;  // w != 1 cannot lie in W_{}
  if (!g.in_parabolic(w, gen_erase(c.support(), s))) return false;
  return is_sortable_recursive(g, c.without_first(), w);
}

ElementId pi_down(const CoxeterGroup& g, const CoxWord& c, ElementId w) {
  if (w == g.identity()) return w;
  GenIndex s = c.first();
  if (g.is_left_descent(w, s))
    return g.left_mult(s, pi_down(g, c.rotated_left(), g.left_mult(s, w)));
  if (c.size() == 1) return g.identity();
  return pi_down(g, c.without_first(), g.parabolic_part(w, gen_erase(c.support(), s)));
}

namespace {
// x * w0(J) for x in W_J, via I(x w0) = T_J \ I(x).
ElementId mult_longest_parabolic(const CoxeterGroup& g, GenSet J, ElementId x) {
  Bitset target = g.reflection_mask(J);
  Bitset cut = g.inversions(x).complement();
  target &= cut;
  auto e = g.by_inversions(target);
  if (!e) fail(Errc::Internal, "parabolic complement is not an inversion set");
  return *e;
}

ElementId longest_parabolic(const CoxeterGroup& g, GenSet J) {
  auto e = g.by_inversions(g.reflection_mask(J));
  if (!e) fail(Errc::Internal, "parabolic longest element not found");
  return *e;
}
}  // namespace

ElementId pi_up(const CoxeterGroup& g, const CoxWord& c, ElementId w) {
  GenSet J = c.support();
  ElementId ww0 = mult_longest_parabolic(g, J, w);
  return mult_longest_parabolic(g, J, pi_down(g, c.reversed(), ww0));
}

ElementId pi_up_recursive(const CoxeterGroup& g, const CoxWord& c, ElementId w) {
  GenSet J = c.support();
  if (w == longest_parabolic(g, J)) return w;
  GenIndex s = c.last();
  if (!g.is_left_descent(w, s))
    return g.left_mult(s, pi_up_recursive(g, c.rotated_right(), g.left_mult(s, w)));
  GenSet Js = gen_erase(J, s);
  ElementId w0J = longest_parabolic(g, J);
  ElementId tail = g.mult(g.inverse(g.parabolic_part(w0J, Js)), w0J);  // leftq_{<s>}(w0)
  if (c.size() == 1) return tail;  // pi_up in W_{} of the identity is 1
  ElementId head = pi_up_recursive(g, c.without_last(), g.parabolic_part(w, Js));
  return g.mult(head, tail);
}

bool is_antisortable(const CoxeterGroup& g, const CoxWord& c, ElementId w) {
  return pi_up(g, c, w) == w;
}

std::vector<ElementId> sortable_elements(const CoxeterGroup& g, const CoxWord& c) {
  std::vector<ElementId> out;
  GenSet J = c.support();
  bool full = (J == full_gen_set(g.rank()));
  for (ElementId w = 0; w < g.order(); ++w) {
    if (!full && !g.in_parabolic(w, J)) continue;
    if (is_sortable(g, c, w)) out.push_back(w);
  }
  return out;
}

ElementId z_map(const CoxeterGroup& g, const CoxWord& c, GenIndex s, ElementId w) {
  if (!is_initial_letter(g, c, s)) fail(Errc::NotInitial, g.label(s) + " is not initial in the word");
  if (!is_sortable(g, c, w)) fail(Errc::NotSortable, "Z_s expects a sortable element");
  if (g.is_left_descent(w, s)) return g.left_mult(s, w);
  return g.join(g.reflection(s), w);
}

ElementId z_inverse(const CoxeterGroup& g, const CoxWord& c, GenIndex s, ElementId w) {
  if (!is_initial_letter(g, c, s)) fail(Errc::NotInitial, g.label(s) + " is not initial in the word");
  if (!is_sortable(g, c.fronted(g, s).rotated_left(), w))
    fail(Errc::NotSortable, "the inverse of Z_s expects an scs-sortable element");
  if (g.is_left_descent(w, s)) return g.parabolic_part(w, gen_erase(c.support(), s));
  return g.left_mult(s, w);
}

CambrianData cambrian_classes(const CoxeterGroup& g, const CoxWord& c) {
  CambrianData data;
  GenSet J = c.support();
  bool full = (J == full_gen_set(g.rank()));
  data.class_of.assign(g.order(), -1);

  data.sortables = sortable_elements(g, c);
  std::vector<int> index_of_sortable(g.order(), -1);
  for (size_t i = 0; i < data.sortables.size(); ++i)
    index_of_sortable[data.sortables[i]] = static_cast<int>(i);

  data.members.resize(data.sortables.size());
  for (ElementId w = 0; w < g.order(); ++w) {
    if (!full && !g.in_parabolic(w, J)) continue;
    ElementId bottom = pi_down(g, c, w);
    int idx = index_of_sortable[bottom];
    if (idx < 0) fail(Errc::Internal, "pi_down produced a non-sortable element");
    data.class_of[w] = idx;
    data.members[idx].push_back(w);
  }

  data.tops.resize(data.sortables.size());
  for (size_t i = 0; i < data.sortables.size(); ++i)
    data.tops[i] = pi_up(g, c, data.sortables[i]);

  data.down_covers.resize(data.sortables.size());
  data.up_covers.resize(data.sortables.size());
  for (size_t i = 0; i < data.sortables.size(); ++i) {
    ElementId bottom = data.sortables[i];
    for (GenIndex s : gen_list(J)) {
      if (g.is_right_descent(bottom, s))
        data.down_covers[i].push_back(data.class_of[g.right_mult(bottom, s)]);
    }
    ElementId top = data.tops[i];
    for (GenIndex s : gen_list(J)) {
      if (!g.is_right_descent(top, s))
        data.up_covers[i].push_back(data.class_of[g.right_mult(top, s)]);
    }
    std::sort(data.down_covers[i].begin(), data.down_covers[i].end());
    std::sort(data.up_covers[i].begin(), data.up_covers[i].end());
  }
  return data;
}

}  // namespace camfan
