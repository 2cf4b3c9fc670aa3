#include "camfan/coxeter.hpp"

#include <algorithm>
#include <deque>

#include "camfan/errors.hpp"

namespace camfan {

std::vector<GenIndex> gen_list(GenSet J) {
  std::vector<GenIndex> v;
  for (GenIndex s = 0; s < 32; ++s)
    if (gen_in(J, s)) v.push_back(s);
  return v;
}

int Bitset::count() const {
  int c = 0;
  for (auto x : w_) c += __builtin_popcountll(x);
  return c;
}

bool Bitset::none() const {
  for (auto x : w_)
    if (x) return false;
  return true;
}

bool Bitset::subset_of(const Bitset& o) const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & ~o.w_[i]) return false;
  return true;
}

Bitset& Bitset::operator&=(const Bitset& o) {
  for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& o) {
  for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

Bitset Bitset::complement() const {
  Bitset r = *this;
  for (auto& x : r.w_) x = ~x;
  int tail = n_ & 63;
  if (tail && !r.w_.empty()) r.w_.back() &= (1ull << tail) - 1;
  return r;
}

std::vector<int> Bitset::bits() const {
  std::vector<int> v;
  for (int i = 0; i < n_; ++i)
    if (test(i)) v.push_back(i);
  return v;
}

std::size_t Bitset::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto x : w_) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

// Squared-length parameters (B(a_s,a_s)/2) making every bond exact; the
// propagation can only be inconsistent along a diagram cycle, and any cycle
// already means the group is infinite.
std::vector<mpq_class> root_length_params(const std::vector<std::vector<int>>& m) {
  int n = static_cast<int>(m.size());
  std::vector<mpq_class> L(n, 0);
  std::vector<int> comp(n, -1);
  for (int start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    std::deque<int> queue{start};
    comp[start] = start;
    L[start] = 1;
    std::vector<int> members;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      members.push_back(u);
      for (int v = 0; v < n; ++v) {
        if (v == u || m[u][v] < 3) continue;
        mpq_class ratio;
        switch (m[u][v]) {
          case 3:
          case 5: ratio = 1; break;
          case 4: ratio = 2; break;
          case 6: ratio = 3; break;
          default: ratio = 1; break;
        }
        if (comp[v] < 0) {
          comp[v] = start;
          L[v] = L[u] * ratio;
          queue.push_back(v);
        } else {
          bool ok = (L[v] == L[u] * ratio) || (L[u] == L[v] * ratio);
          if (!ok)
            fail(Errc::NonFiniteType,
                 "root-length constraints are inconsistent; the diagram contains a cycle");
        }
      }
    }
    mpq_class mn = L[members[0]];
    for (int u : members) mn = std::min(mn, L[u]);
    for (int u : members) L[u] /= mn;
  }
  return L;
}

}  // namespace

CoxeterGroup CoxeterGroup::build(const std::vector<std::vector<int>>& coxeter_matrix,
                                 std::vector<std::string> labels, BuildOptions opts) {
  CoxeterGroup g;
  int n = static_cast<int>(coxeter_matrix.size());
  if (n == 0 || n > 31) fail(Errc::UsageError, "rank must be between 1 and 31");
  for (const auto& row : coxeter_matrix)
    if (static_cast<int>(row.size()) != n) fail(Errc::UsageError, "Coxeter matrix is not square");
  for (int i = 0; i < n; ++i) {
    if (coxeter_matrix[i][i] != 1) fail(Errc::UsageError, "Coxeter matrix diagonal must be 1");
    for (int j = i + 1; j < n; ++j) {
      int m = coxeter_matrix[i][j];
      if (m != coxeter_matrix[j][i]) fail(Errc::UsageError, "Coxeter matrix must be symmetric");
      if (m < 2 || m > 6)
        fail(Errc::UnsupportedBondLabel,
             "m(s,t) = " + std::to_string(m) + " is outside the supported range {2,...,6}");
    }
  }
  g.n_ = n;
  g.matrix_ = coxeter_matrix;
  if (labels.empty())
    for (int i = 0; i < n; ++i) labels.push_back("s" + std::to_string(i));
  if (static_cast<int>(labels.size()) != n) fail(Errc::UsageError, "label count must match rank");
  g.labels_ = std::move(labels);

  bool has5 = false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (coxeter_matrix[i][j] == 5) has5 = true;
  g.radicand_ = has5 ? 5 : 0;

  // Bilinear form: B(a_s,a_s) = 2 L_s, and on a bond of label m the
  // off-diagonal entry is -L_min * {0-placeholder,?,0,1,2,phi*?,3}[...].
  auto L = root_length_params(coxeter_matrix);
  g.form_ = Mat(n, n);
  for (int i = 0; i < n; ++i) g.form_.at(i, i) = Scalar(mpq_class(2 * L[i]));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int m = coxeter_matrix[i][j];
      mpq_class lmin = std::min(L[i], L[j]);
      Scalar v;
      switch (m) {
        case 2: v = Scalar(0); break;
        case 3: v = Scalar(mpq_class(-lmin)); break;
        case 4: v = Scalar(mpq_class(-2 * lmin)); break;
        case 6: v = Scalar(mpq_class(-3 * lmin)); break;
        case 5: v = Scalar::quadratic(mpq_class(-lmin) / 2, mpq_class(-lmin) / 2, 5); break;
        default: break;
      }
      g.form_.at(i, j) = v;
      g.form_.at(j, i) = v;
    }

  if (!positive_definite(g.form_))
    fail(Errc::NonFiniteType, "bilinear form is not positive definite; the group is infinite");

  g.cartan_ = Mat(n, n);
  g.symmetrizer_ = Vec(n);
  g.crystallographic_ = !has5;
  for (int i = 0; i < n; ++i) {
    g.symmetrizer_[i] = Scalar(mpq_class(L[i]));
    Scalar inv = (Scalar(2) / g.form_.at(i, i));
    for (int j = 0; j < n; ++j) {
      g.cartan_.at(i, j) = inv * g.form_.at(i, j);
      if (!g.cartan_.at(i, j).is_integer()) g.crystallographic_ = false;
    }
  }

  auto weight_mat = camfan::inverse(g.cartan_);
  if (!weight_mat) fail(Errc::SingularForm, "Cartan matrix is singular");
  for (int s = 0; s < n; ++s) g.weights_.push_back(weight_mat->col(s));

  // Root system: orbit of the simple roots under the simple reflections.
  for (int s = 0; s < n; ++s) {
    Vec v(n);
    v[s] = Scalar(1);
    g.root_lookup_.emplace(v, s);
    g.pos_roots_.push_back(std::move(v));
  }
  size_t root_cap = 2 * opts.element_cap + 16;
  for (size_t head = 0; head < g.pos_roots_.size(); ++head) {
    for (int s = 0; s < n; ++s) {
      // s(x) = x - <x, a_s^v> a_s; only the s-coordinate changes.
      Vec img = g.pos_roots_[head];
      Scalar pairing = Scalar(2) * g.form_apply(img, g.pos_roots_[s]) / g.form_.at(s, s);
      img[s] -= pairing;
      bool pos = false, neg = false;
      for (const auto& c : img) {
        if (c.sign() > 0) pos = true;
        if (c.sign() < 0) neg = true;
      }
      if (pos && neg) fail(Errc::Internal, "root with mixed signs");
      if (neg) continue;
      if (g.root_lookup_.find(img) == g.root_lookup_.end()) {
        if (g.pos_roots_.size() >= root_cap)
          fail(Errc::NonFiniteType, "root closure exceeded the element cap");
        g.root_lookup_.emplace(img, static_cast<int>(g.pos_roots_.size()));
        g.pos_roots_.push_back(img);
      }
    }
  }
  // Deterministic root order: simple roots first, then by (height, coords).
  {
    std::vector<int> idx(g.pos_roots_.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    auto height = [&](int r) {
      Scalar h;
      for (const auto& c : g.pos_roots_[r]) h += c;
      return h;
    };
    std::sort(idx.begin(), idx.end(), [&](int x, int y) {
      if (x < n || y < n) return x < y;
      int c = Scalar::compare(height(x), height(y));
      if (c != 0) return c < 0;
      return vec_compare(g.pos_roots_[x], g.pos_roots_[y]) < 0;
    });
    std::vector<Vec> sorted;
    sorted.reserve(idx.size());
    for (int i : idx) sorted.push_back(g.pos_roots_[i]);
    g.pos_roots_ = std::move(sorted);
    g.root_lookup_.clear();
    for (size_t i = 0; i < g.pos_roots_.size(); ++i)
      g.root_lookup_.emplace(g.pos_roots_[i], static_cast<int>(i));
  }

  int T = g.num_pos_roots();
  g.root_support_.resize(T);
  for (int t = 0; t < T; ++t) {
    GenSet sup = 0;
    for (int j = 0; j < n; ++j)
      if (!g.pos_roots_[t][j].is_zero()) sup = gen_insert(sup, j);
    g.root_support_[t] = sup;
  }

  g.gen_act_.assign(n, std::vector<SignedRoot>(T));
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < T; ++t) {
      Vec img = g.pos_roots_[t];
      Scalar pairing = Scalar(2) * g.form_apply(img, g.pos_roots_[s]) / g.form_.at(s, s);
      img[s] -= pairing;
      bool neg = false;
      for (const auto& c : img)
        if (c.sign() < 0) neg = true;
      if (neg) {
        Vec flipped = img;
        for (auto& c : flipped) c = -c;
        g.gen_act_[s][t] = negate_root(g.root_lookup_.at(flipped));
      } else {
        g.gen_act_[s][t] = g.root_lookup_.at(img);
      }
    }
  }

  // Element enumeration: breadth-first closure under right multiplication.
  {
    Elt id;
    id.perm.resize(T);
    for (int t = 0; t < T; ++t) id.perm[t] = t;
    id.inv = Bitset(T);
    id.length = 0;
    g.elts_.push_back(std::move(id));
    g.index_.emplace(g.elts_[0].inv, 0);
    g.right_.assign(static_cast<size_t>(n), kNoElement);

    for (ElementId w = 0; w < g.elts_.size(); ++w) {
      for (int s = 0; s < n; ++s) {
        if (g.right_[w * n + s] != kNoElement) continue;
        SignedRoot img = g.elts_[w].perm[s];
        if (!root_is_positive(img)) continue;  // edge was filled from the shorter endpoint
        Bitset child_inv = g.elts_[w].inv;
        child_inv.set(root_abs(img));
        auto it = g.index_.find(child_inv);
        ElementId child;
        if (it != g.index_.end()) {
          child = it->second;
        } else {
          if (g.elts_.size() >= opts.element_cap)
            fail(Errc::NonFiniteType, "element enumeration exceeded the cap of " +
                                          std::to_string(opts.element_cap));
          Elt e;
          e.perm.resize(T);
          for (int t = 0; t < T; ++t) {
            SignedRoot sr = g.gen_act_[s][t];
            e.perm[t] = root_is_positive(sr) ? g.elts_[w].perm[sr]
                                             : negate_root(g.elts_[w].perm[root_abs(sr)]);
          }
          e.inv = child_inv;
          e.length = g.elts_[w].length + 1;
          child = static_cast<ElementId>(g.elts_.size());
          g.elts_.push_back(std::move(e));
          g.index_.emplace(g.elts_[child].inv, child);
          g.right_.resize(g.right_.size() + n, kNoElement);
        }
        g.right_[w * n + s] = child;
        g.right_[child * n + s] = w;
      }
    }
  }

  // Left multiplication table via I(sw) = s I(w) s  (symmetric difference {s}).
  {
    int N = static_cast<int>(g.elts_.size());
    g.left_.assign(static_cast<size_t>(N) * n, kNoElement);
    for (ElementId w = 0; w < g.elts_.size(); ++w) {
      for (int s = 0; s < n; ++s) {
        Bitset conj(T);
        const Bitset& inv = g.elts_[w].inv;
        for (int t = 0; t < T; ++t)
          if (inv.test(t)) conj.set(root_abs(g.gen_act_[s][t]));
        conj.flip(s);
        auto it = g.index_.find(conj);
        if (it == g.index_.end()) fail(Errc::Internal, "left multiplication fell outside the group");
        g.left_[w * n + s] = it->second;
      }
    }
  }

  // Longest element: unique maximum length.
  {
    int maxlen = g.elts_.back().length;
    size_t count = 0;
    for (const auto& e : g.elts_)
      if (e.length == maxlen) ++count;
    if (count != 1) fail(Errc::Internal, "longest element is not unique");
  }

  // Reflections as elements.
  g.reflection_elt_.resize(T);
  for (int t = 0; t < T; ++t) {
    std::vector<SignedRoot> perm(T);
    for (int r = 0; r < T; ++r) {
      Vec img = g.pos_roots_[r];
      Scalar pairing = g.pair_with_coroot(img, t);
      img = vec_sub(img, vec_scaled(g.pos_roots_[t], pairing));
      bool neg = false;
      for (const auto& c : img)
        if (c.sign() < 0) neg = true;
      if (neg) {
        Vec flipped = img;
        for (auto& c : flipped) c = -c;
        perm[r] = negate_root(g.root_lookup_.at(flipped));
      } else {
        perm[r] = g.root_lookup_.at(img);
      }
    }
    ElementId e = g.lookup_perm(perm);
    g.reflection_elt_[t] = e;
    g.reflection_of_elt_.emplace(e, t);
  }

  return g;
}

std::optional<GenIndex> CoxeterGroup::gen_by_label(const std::string& name) const {
  for (int s = 0; s < n_; ++s)
    if (labels_[s] == name) return s;
  return std::nullopt;
}

Scalar CoxeterGroup::form_apply(const Vec& x, const Vec& y) const {
  Scalar r;
  for (int i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    Scalar row;
    for (int j = 0; j < n_; ++j)
      if (!y[j].is_zero()) row += form_.at(i, j) * y[j];
    r += x[i] * row;
  }
  return r;
}

Scalar CoxeterGroup::pair_with_coroot(const Vec& x, int t) const {
  return Scalar(2) * form_apply(x, pos_roots_[t]) / form_apply(pos_roots_[t], pos_roots_[t]);
}

Vec CoxeterGroup::proj_parabolic(GenSet J, const Vec& v) const {
  Vec out(n_);
  auto gens = gen_list(J);
  if (gens.empty()) return out;
  int k = static_cast<int>(gens.size());
  Mat gram(k, k);
  Vec rhs(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) gram.at(i, j) = form_.at(gens[i], gens[j]);
    rhs[i] = form_apply(pos_roots_[gens[i]], v);
  }
  auto coef = solve(gram, rhs);
  if (!coef) fail(Errc::SingularForm, "parabolic Gram matrix is singular");
  for (int i = 0; i < k; ++i) out[gens[i]] = (*coef)[i];
  return out;
}

Vec CoxeterGroup::root_vec(SignedRoot r) const {
  if (root_is_positive(r)) return pos_roots_[r];
  Vec v = pos_roots_[root_abs(r)];
  for (auto& c : v) c = -c;
  return v;
}

std::optional<SignedRoot> CoxeterGroup::root_index(const Vec& v) const {
  auto it = root_lookup_.find(v);
  if (it != root_lookup_.end()) return it->second;
  Vec flipped = v;
  for (auto& c : flipped) c = -c;
  it = root_lookup_.find(flipped);
  if (it != root_lookup_.end()) return negate_root(it->second);
  return std::nullopt;
}

Vec CoxeterGroup::coroot(int t) const {
  Scalar scale = Scalar(2) / form_apply(pos_roots_[t], pos_roots_[t]);
  return vec_scaled(pos_roots_[t], scale);
}

SignedRoot CoxeterGroup::gen_action(GenIndex s, SignedRoot r) const {
  SignedRoot img = gen_act_[s][root_abs(r)];
  return root_is_positive(r) ? img : negate_root(img);
}

std::optional<int> CoxeterGroup::reflection_index(ElementId w) const {
  auto it = reflection_of_elt_.find(w);
  if (it == reflection_of_elt_.end()) return std::nullopt;
  return it->second;
}

std::string CoxeterGroup::reflection_name(int t) const { return word_str(reflection_elt_[t]); }

Bitset CoxeterGroup::inversions_from_perm(const std::vector<SignedRoot>& perm) const {
  Bitset inv(num_pos_roots());
  for (int j = 0; j < num_pos_roots(); ++j)
    if (!root_is_positive(perm[j])) inv.set(root_abs(perm[j]));
  return inv;
}

ElementId CoxeterGroup::lookup_perm(const std::vector<SignedRoot>& perm) const {
  auto it = index_.find(inversions_from_perm(perm));
  if (it == index_.end()) fail(Errc::Internal, "permutation is not a group element");
  return it->second;
}

ElementId CoxeterGroup::mult(ElementId u, ElementId w) const {
  int T = num_pos_roots();
  const auto& pu = elts_[u].perm;
  const auto& pw = elts_[w].perm;
  std::vector<SignedRoot> perm(T);
  for (int t = 0; t < T; ++t) {
    SignedRoot mid = pw[t];
    perm[t] = root_is_positive(mid) ? pu[mid] : negate_root(pu[root_abs(mid)]);
  }
  return lookup_perm(perm);
}

ElementId CoxeterGroup::inverse(ElementId w) const {
  int T = num_pos_roots();
  const auto& p = elts_[w].perm;
  std::vector<SignedRoot> inv(T);
  for (int t = 0; t < T; ++t) {
    SignedRoot img = p[t];
    if (root_is_positive(img))
      inv[img] = t;
    else
      inv[root_abs(img)] = negate_root(t);
  }
  return lookup_perm(inv);
}

ElementId CoxeterGroup::mult_w0(ElementId w) const {
  auto it = index_.find(elts_[w].inv.complement());
  if (it == index_.end()) fail(Errc::Internal, "complement of inversion set not found");
  return it->second;
}

SignedRoot CoxeterGroup::act(ElementId w, SignedRoot r) const {
  SignedRoot img = elts_[w].perm[root_abs(r)];
  return root_is_positive(r) ? img : negate_root(img);
}

Vec CoxeterGroup::act_vec(ElementId w, const Vec& v) const {
  Vec r(n_);
  for (int j = 0; j < n_; ++j) {
    if (v[j].is_zero()) continue;
    Vec rv = root_vec(elts_[w].perm[j]);
    for (int i = 0; i < n_; ++i) r[i] += v[j] * rv[i];
  }
  return r;
}

GenSet CoxeterGroup::descent_set(ElementId w) const {
  GenSet d = 0;
  for (int s = 0; s < n_; ++s)
    if (is_right_descent(w, s)) d = gen_insert(d, s);
  return d;
}

int CoxeterGroup::num_descents(ElementId w) const { return __builtin_popcount(descent_set(w)); }

std::vector<int> CoxeterGroup::cover_reflections(ElementId w) const {
  std::vector<int> cov;
  for (int s = 0; s < n_; ++s) {
    SignedRoot img = elts_[w].perm[s];
    if (!root_is_positive(img)) cov.push_back(root_abs(img));
  }
  std::sort(cov.begin(), cov.end());
  return cov;
}

ElementId CoxeterGroup::join(ElementId u, ElementId w) const {
  if (leq(u, w)) return w;
  if (leq(w, u)) return u;
  Bitset both = elts_[u].inv;
  both |= elts_[w].inv;
  for (ElementId x = 0; x < elts_.size(); ++x)
    if (both.subset_of(elts_[x].inv)) return x;  // first hit in length order is minimal
  fail(Errc::Internal, "join not found");
}

ElementId CoxeterGroup::meet(ElementId u, ElementId w) const {
  if (leq(u, w)) return u;
  if (leq(w, u)) return w;
  Bitset common = elts_[u].inv;
  common &= elts_[w].inv;
  for (ElementId x = static_cast<ElementId>(elts_.size()); x-- > 0;)
    if (elts_[x].inv.subset_of(common)) return x;
  fail(Errc::Internal, "meet not found");
}

std::vector<ElementId> CoxeterGroup::weak_up_covers(ElementId w) const {
  std::vector<ElementId> v;
  for (int s = 0; s < n_; ++s)
    if (!is_right_descent(w, s)) v.push_back(right_mult(w, s));
  return v;
}

std::vector<ElementId> CoxeterGroup::weak_down_covers(ElementId w) const {
  std::vector<ElementId> v;
  for (int s = 0; s < n_; ++s)
    if (is_right_descent(w, s)) v.push_back(right_mult(w, s));
  return v;
}

Bitset CoxeterGroup::reflection_mask(GenSet J) const {
  Bitset m(num_pos_roots());
  for (int t = 0; t < num_pos_roots(); ++t)
    if ((root_support_[t] & ~J) == 0) m.set(t);
  return m;
}

bool CoxeterGroup::in_parabolic(ElementId w, GenSet J) const {
  return elts_[w].inv.subset_of(reflection_mask(J));
}

ElementId CoxeterGroup::parabolic_part(ElementId w, GenSet J) const {
  Bitset inv = elts_[w].inv;
  inv &= reflection_mask(J);
  auto it = index_.find(inv);
  if (it == index_.end()) fail(Errc::Internal, "I(w) ∩ W_J is not an inversion set");
  return it->second;
}

ElementId CoxeterGroup::parabolic_remainder(ElementId w, GenSet J) const {
  return mult(inverse(parabolic_part(w, J)), w);
}

ElementId CoxeterGroup::from_word(std::span<const GenIndex> word) const {
  ElementId w = identity();
  for (GenIndex s : word) w = right_mult(w, s);
  return w;
}

std::vector<GenIndex> CoxeterGroup::canonical_word(ElementId w) const {
  std::vector<GenIndex> word;
  while (w != identity()) {
    for (int s = 0; s < n_; ++s) {
      if (is_left_descent(w, s)) {
        word.push_back(s);
        w = left_mult(s, w);
        break;
      }
    }
  }
  return word;
}

std::string CoxeterGroup::word_str(ElementId w) const {
  if (w == identity()) return "1";
  std::string out;
  for (GenIndex s : canonical_word(w)) out += labels_[s];
  return out;
}

std::optional<ElementId> CoxeterGroup::by_inversions(const Bitset& inv) const {
  auto it = index_.find(inv);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace camfan
