#include "camfan/cluster.hpp"

#include <algorithm>

#include "camfan/errors.hpp"

namespace camfan {

Apr apr_neg_simple(const CoxeterGroup& g, GenIndex s) { return g.num_pos_roots() + s; }

bool apr_is_neg_simple(const CoxeterGroup& g, Apr a) { return a >= g.num_pos_roots(); }

GenIndex apr_neg_gen(const CoxeterGroup& g, Apr a) { return a - g.num_pos_roots(); }

Vec apr_vec(const CoxeterGroup& g, Apr a) {
  if (apr_is_neg_simple(g, a)) {
    Vec v(g.rank());
    v[apr_neg_gen(g, a)] = Scalar(-1);
    return v;
  }
  return g.pos_root(a);
}

GenSet apr_support(const CoxeterGroup& g, Apr a) {
  if (apr_is_neg_simple(g, a)) return gen_insert(0, apr_neg_gen(g, a));
  return g.root_support(a);
}

std::string apr_label(const CoxeterGroup& g, Apr a) {
  if (apr_is_neg_simple(g, a)) return "-a[" + g.label(apr_neg_gen(g, a)) + "]";
  return "a[" + g.reflection_name(a) + "]";
}

std::vector<Apr> almost_positive_roots(const CoxeterGroup& g, GenSet J) {
  std::vector<Apr> v;
  for (int t = 0; t < g.num_pos_roots(); ++t)
    if ((g.root_support(t) & ~J) == 0) v.push_back(t);
  for (GenIndex s : gen_list(J)) v.push_back(apr_neg_simple(g, s));
  return v;
}

Apr sigma(const CoxeterGroup& g, GenIndex s, Apr a) {
  if (apr_is_neg_simple(g, a)) {
    GenIndex r = apr_neg_gen(g, a);
    return r == s ? s : a;  // -a_s maps to a_s; other negatives are fixed
  }
  SignedRoot img = g.gen_action(s, a);
  return root_is_positive(img) ? img : apr_neg_simple(g, s);  // only a_s flips negative
}

Apr sigma_word_inv(const CoxeterGroup& g, const CoxWord& c, Apr a) {
  for (GenIndex s : c.letters()) a = sigma(g, s, a);
  return a;
}

Apr sigma_word(const CoxeterGroup& g, const CoxWord& c, Apr a) {
  const auto& w = c.letters();
  for (auto it = w.rbegin(); it != w.rend(); ++it) a = sigma(g, *it, a);
  return a;
}

namespace {

long iteration_cap(const CoxeterGroup& g, const CoxWord& c) {
  long nj = c.size();
  long phi = 0;
  for (int t = 0; t < g.num_pos_roots(); ++t)
    if ((g.root_support(t) & ~c.support()) == 0) phi += 2;
  return nj * (phi + nj) + nj;
}

// beta in (Phi_{<s>})_{>=-1} relative to the support of the current word.
bool in_deleted_parabolic(const CoxeterGroup& g, GenIndex s, Apr b) {
  if (apr_is_neg_simple(g, b)) return apr_neg_gen(g, b) != s;
  return !gen_in(g.root_support(b), s);
}

}  // namespace

bool compatible(const CoxeterGroup& g, const CoxWord& c, Apr a, Apr b) {
  long cap = iteration_cap(g, c);
  CoxWord word = c;
  for (long step = 0; step <= cap; ++step) {
    if (apr_is_neg_simple(g, a)) return in_deleted_parabolic(g, apr_neg_gen(g, a), b);
    if (apr_is_neg_simple(g, b)) return in_deleted_parabolic(g, apr_neg_gen(g, b), a);
    GenIndex s = word.first();
    a = sigma(g, s, a);
    b = sigma(g, s, b);
    word = word.rotated_left();
  }
  fail(Errc::IterationCapExceeded, "compatibility recursion exceeded its cap");
}

int little_r(const CoxeterGroup& g, const CoxWord& c, Apr a) {
  long cap = iteration_cap(g, c);
  int r = 0;
  int pos = 0;
  while (!apr_is_neg_simple(g, a)) {
    a = sigma(g, c[pos], a);
    pos = (pos + 1) % c.size();
    if (++r > cap) fail(Errc::IterationCapExceeded, "sigma orbit exceeded its cap");
  }
  return r;
}

int big_R(const CoxeterGroup& g, const CoxWord& c, Apr a) {
  int r = little_r(g, c, a);
  int R = (r + c.size() - 1) / c.size();
  // Independent route: least R with sigma_c^{-R}(a) negative simple.
  int direct = 0;
  Apr cur = a;
  while (!apr_is_neg_simple(g, cur)) {
    cur = sigma_word_inv(g, c, cur);
    ++direct;
  }
  if (direct != R) fail(Errc::Internal, "the two R computations disagree");
  return R;
}

namespace {

struct CliqueEnum {
  const CoxeterGroup& g;
  int n;
  std::vector<Apr> universe;
  std::vector<std::vector<bool>> adj;
  std::vector<Cluster> maximal;
  std::vector<std::vector<Cluster>>* all_faces = nullptr;

  CliqueEnum(const CoxeterGroup& gg, const CoxWord& c) : g(gg) {
    n = c.size();
    universe = almost_positive_roots(g, c.support());
    int m = static_cast<int>(universe.size());
    adj.assign(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        adj[i][j] = adj[j][i] = compatible(g, c, universe[i], universe[j]);
  }

  void run(bool collect_faces) {
    std::vector<int> cur;
    if (collect_faces) all_faces->assign(n + 1, {});
    rec(cur, 0, collect_faces);
  }

  void rec(std::vector<int>& cur, int start, bool collect_faces) {
    if (collect_faces) {
      Cluster f;
      for (int i : cur) f.push_back(universe[i]);
      (*all_faces)[cur.size()].push_back(std::move(f));
    }
    bool is_maximal = true;
    int m = static_cast<int>(universe.size());
    for (int v = 0; v < m && is_maximal; ++v) {
      if (std::find(cur.begin(), cur.end(), v) != cur.end()) continue;
      bool ok = true;
      for (int u : cur)
        if (!adj[u][v]) {
          ok = false;
          break;
        }
      if (ok) is_maximal = false;
    }
    if (is_maximal) {
      if (static_cast<int>(cur.size()) != n)
        fail(Errc::MaximalCliqueWrongSize,
             "maximal compatible set of size " + std::to_string(cur.size()) +
                 " in rank " + std::to_string(n));
      Cluster C;
      for (int i : cur) C.push_back(universe[i]);
      maximal.push_back(std::move(C));
      if (!collect_faces) return;
    }
    for (int v = start; v < m; ++v) {
      bool ok = true;
      for (int u : cur)
        if (!adj[u][v]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(v);
      rec(cur, v + 1, collect_faces);
      cur.pop_back();
    }
  }
};

}  // namespace

std::vector<Cluster> enumerate_clusters(const CoxeterGroup& g, const CoxWord& c) {
  CliqueEnum e(g, c);
  e.run(false);
  std::sort(e.maximal.begin(), e.maximal.end());
  return e.maximal;
}

std::vector<std::vector<Cluster>> faces_by_size(const CoxeterGroup& g, const CoxWord& c) {
  CliqueEnum e(g, c);
  std::vector<std::vector<Cluster>> faces;
  e.all_faces = &faces;
  e.run(true);
  return faces;
}

std::vector<long long> f_vector(const CoxeterGroup& g, const CoxWord& c) {
  auto faces = faces_by_size(g, c);
  std::vector<long long> f;
  for (const auto& fs : faces) f.push_back(static_cast<long long>(fs.size()));
  return f;  // f[k] = number of k-element faces, f[0] = 1
}

std::vector<long long> h_from_f(const std::vector<long long>& f, int dim) {
  // sum_i f_{i-1} (x-1)^{dim-i} = sum_k h_k x^{dim-k}; f is indexed by
  // cardinality (f[0] = 1 for the empty face).
  std::vector<long long> poly(dim + 1, 0);  // coefficients of x^e
  for (int i = 0; i <= dim; ++i) {
    long long fi = (i < static_cast<int>(f.size())) ? f[i] : 0;
    if (fi == 0) continue;
    // (x-1)^(dim-i): binomial expansion
    int e = dim - i;
    long long binom = 1;
    for (int k = 0; k <= e; ++k) {
      long long sign = ((e - k) % 2 == 0) ? 1 : -1;
      poly[k] += fi * sign * binom;
      binom = binom * (e - k) / (k + 1);
    }
  }
  std::vector<long long> h(dim + 1);
  for (int k = 0; k <= dim; ++k) h[k] = poly[dim - k];
  return h;
}

std::vector<long long> h_vector(const CoxeterGroup& g, const CoxWord& c) {
  return h_from_f(f_vector(g, c), c.size());
}

Cluster cl_map(const CoxeterGroup& g, const CoxWord& c, ElementId w) {
  if (!is_sortable(g, c, w)) fail(Errc::NotSortable, "cl is defined on sortable elements only");
  SortingWord sw = sorting_word(g, c, w);
  int k = static_cast<int>(sw.letters.size());
  std::vector<int> rightmost(32, -1);
  for (int j = 0; j < k; ++j) rightmost[sw.letters[j]] = j;
  // Prefix products a_1...a_j to read off the last-reflection roots.
  Cluster C;
  ElementId prefix = g.identity();
  for (int j = 0; j < k; ++j) {
    GenIndex s = sw.letters[j];
    if (rightmost[s] == j) {
      SignedRoot root = g.act(prefix, s);
      if (!root_is_positive(root)) fail(Errc::Internal, "last reflection gave a negative root");
      C.push_back(root);
    }
    prefix = g.right_mult(prefix, s);
  }
  for (GenIndex s : gen_list(c.support()))
    if (rightmost[s] < 0) C.push_back(apr_neg_simple(g, s));
  std::sort(C.begin(), C.end());
  return C;
}

Apr exchange_partner(const CoxeterGroup& g, const CoxWord& c, const Cluster& C, Apr a) {
  std::vector<Apr> rest;
  for (Apr x : C)
    if (x != a) rest.push_back(x);
  if (rest.size() + 1 != C.size()) fail(Errc::UsageError, "root does not belong to the cluster");
  std::vector<Apr> found;
  for (Apr cand : almost_positive_roots(g, c.support())) {
    if (cand == a) continue;
    bool ok = true;
    for (Apr x : rest)
      if (cand == x || !compatible(g, c, cand, x)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    // A compatible completion of size n is automatically a cluster; it must
    // not extend to anything larger because maximal sets have size n.
    found.push_back(cand);
  }
  if (found.empty()) fail(Errc::NoPartner, "no exchange partner for " + apr_label(g, a));
  if (found.size() > 1) fail(Errc::MultiplePartners, "ambiguous exchange for " + apr_label(g, a));
  return found[0];
}

ClusterSet::ClusterSet(const CoxeterGroup& g, const CoxWord& c) : g_(&g), c_(c) {
  universe_ = almost_positive_roots(g, c.support());
  clusters_ = enumerate_clusters(g, c);
  for (size_t i = 0; i < clusters_.size(); ++i) index_.emplace(clusters_[i], static_cast<int>(i));

  // cl is a bijection from sortable elements onto the clusters.
  sortable_of_.assign(clusters_.size(), kNoElement);
  for (ElementId w : sortable_elements(g, c)) {
    Cluster C = cl_map(g, c, w);
    auto it = index_.find(C);
    if (it == index_.end()) fail(Errc::Internal, "cl image is not a cluster");
    if (sortable_of_[it->second] != kNoElement) fail(Errc::Internal, "cl is not injective");
    sortable_of_[it->second] = w;
    cluster_of_sortable_.emplace(w, it->second);
  }
  for (ElementId w : sortable_of_)
    if (w == kNoElement) fail(Errc::Internal, "cl is not surjective");

  for (Apr a : universe_) {
    r_.emplace(a, little_r(g, c, a));
    R_.emplace(a, big_R(g, c, a));
  }

  partner_.resize(clusters_.size());
  up_covers_.assign(clusters_.size(), {});
  down_covers_.assign(clusters_.size(), {});
  for (size_t i = 0; i < clusters_.size(); ++i) {
    for (Apr a : clusters_[i]) {
      Apr b = exchange_partner(g, c, clusters_[i], a);
      partner_[i].emplace(a, b);
      Cluster other = clusters_[i];
      std::replace(other.begin(), other.end(), a, b);
      std::sort(other.begin(), other.end());
      auto it = index_.find(other);
      if (it == index_.end()) fail(Errc::Internal, "exchange left the cluster complex");
      int Ra = R_.at(a), Rb = R_.at(b);
      if (Ra == Rb) fail(Errc::Internal, "exchangeable pair with equal R");
      if (Ra < Rb)
        up_covers_[i].push_back(it->second);
      else
        down_covers_[i].push_back(it->second);
    }
    std::sort(up_covers_[i].begin(), up_covers_[i].end());
    std::sort(down_covers_[i].begin(), down_covers_[i].end());
  }
}

int ClusterSet::index_of(const Cluster& C) const {
  auto it = index_.find(C);
  if (it == index_.end()) fail(Errc::UsageError, "not a cluster of this word");
  return it->second;
}

int ClusterSet::cluster_of_sortable(ElementId w) const {
  auto it = cluster_of_sortable_.find(w);
  if (it == cluster_of_sortable_.end()) fail(Errc::NotSortable, "element is not sortable");
  return it->second;
}

int ClusterSet::r_value(Apr a) const { return r_.at(a); }
int ClusterSet::R_value(Apr a) const { return R_.at(a); }

Apr ClusterSet::partner(int i, Apr a) const { return partner_[i].at(a); }

bool ClusterSet::is_upper(int i, Apr a) const { return R_value(a) > R_value(partner(i, a)); }

std::vector<Apr> ClusterSet::upper_roots(int i) const {
  std::vector<Apr> v;
  for (Apr a : clusters_[i])
    if (is_upper(i, a)) v.push_back(a);
  return v;
}

std::vector<Apr> ClusterSet::lower_roots(int i) const {
  std::vector<Apr> v;
  for (Apr a : clusters_[i])
    if (!is_upper(i, a)) v.push_back(a);
  return v;
}

Apr tau_pm(const CoxeterGroup& g, const Bipartition& bip, int eps, Apr a) {
  GenSet part = eps > 0 ? bip.plus : bip.minus;
  for (GenIndex s : gen_list(part)) a = sigma(g, s, a);
  return a;
}

Apr tau_minus(const CoxeterGroup& g, const Bipartition& bip, Apr a) {
  return tau_pm(g, bip, -1, a);
}

Apr tau_plus(const CoxeterGroup& g, const Bipartition& bip, Apr a) {
  return tau_pm(g, bip, +1, a);
}

int k_minus(const CoxeterGroup& g, const Bipartition& bip, Apr a) {
  long cap = 4L * (g.num_pos_roots() + g.rank()) + 4;
  Apr cur = a;
  for (int k = 0; k <= cap; ++k) {
    Apr next = (k % 2 == 0) ? tau_minus(g, bip, cur) : tau_plus(g, bip, cur);
    if (apr_is_neg_simple(g, cur) && next == cur) return k;
    cur = next;
  }
  fail(Errc::IterationCapExceeded, "tau orbit exceeded its cap");
}

int epsilon_pair(const CoxeterGroup& g, const Bipartition& bip, Apr a, Apr b) {
  int ka = k_minus(g, bip, a), kb = k_minus(g, bip, b);
  if (ka == kb) fail(Errc::Internal, "k_- ties are impossible for exchangeable pairs");
  return ka < kb ? -1 : 1;
}

}  // namespace camfan
