#ifndef CAMFAN_CLUSTER_HPP
#define CAMFAN_CLUSTER_HPP

#include <map>
#include <string>
#include <vector>

#include "camfan/sortable.hpp"

namespace camfan {

/// Almost positive root: values 0..T-1 are positive-root indices, T + s is
/// the negated simple root -a_s. All indices refer to the full group; a word
/// supported on J restricts everything to (Phi_J)_{>=-1}.
using Apr = int;

Apr apr_neg_simple(const CoxeterGroup& g, GenIndex s);
bool apr_is_neg_simple(const CoxeterGroup& g, Apr a);
GenIndex apr_neg_gen(const CoxeterGroup& g, Apr a);
Vec apr_vec(const CoxeterGroup& g, Apr a);
GenSet apr_support(const CoxeterGroup& g, Apr a);
/// "a[s0s1s0]" for positive roots (reflection word), "-a[s1]" for -a_{s1}.
std::string apr_label(const CoxeterGroup& g, Apr a);
std::vector<Apr> almost_positive_roots(const CoxeterGroup& g, GenSet J);

Apr sigma(const CoxeterGroup& g, GenIndex s, Apr a);
/// sigma_c^{-1}: applies sigma along the word left to right.
Apr sigma_word_inv(const CoxeterGroup& g, const CoxWord& c, Apr a);
/// sigma_c: applies sigma along the word right to left.
Apr sigma_word(const CoxeterGroup& g, const CoxWord& c, Apr a);

bool compatible(const CoxeterGroup& g, const CoxWord& c, Apr a, Apr b);

/// Least count of cyclic sigma_{s_1}, sigma_{s_2}, ... applications sending a
/// to a negative simple root.
int little_r(const CoxeterGroup& g, const CoxWord& c, Apr a);
/// ceil(r/n); also the least R with sigma_c^{-R}(a) negative simple. Both
/// routes are computed and must agree.
int big_R(const CoxeterGroup& g, const CoxWord& c, Apr a);

using Cluster = std::vector<Apr>;  // sorted

std::vector<Cluster> enumerate_clusters(const CoxeterGroup& g, const CoxWord& c);
/// All c-compatible subsets, grouped by cardinality (faces[k] lists the
/// k-element faces; faces[0] = {{}}).
std::vector<std::vector<Cluster>> faces_by_size(const CoxeterGroup& g, const CoxWord& c);
std::vector<long long> f_vector(const CoxeterGroup& g, const CoxWord& c);
std::vector<long long> h_vector(const CoxeterGroup& g, const CoxWord& c);
std::vector<long long> h_from_f(const std::vector<long long>& f, int dim);

Cluster cl_map(const CoxeterGroup& g, const CoxWord& c, ElementId w);

Apr exchange_partner(const CoxeterGroup& g, const CoxWord& c, const Cluster& C, Apr a);

/// Clusters of c with the cl bijection, R values, exchange structure and the
/// cluster lattice (covers oriented by R). Built once per word.
class ClusterSet {
 public:
  ClusterSet(const CoxeterGroup& g, const CoxWord& c);

  const CoxeterGroup& group() const { return *g_; }
  const CoxWord& word() const { return c_; }
  const std::vector<Apr>& universe() const { return universe_; }
  int size() const { return static_cast<int>(clusters_.size()); }
  const Cluster& cluster(int i) const { return clusters_[i]; }
  const std::vector<Cluster>& clusters() const { return clusters_; }
  int index_of(const Cluster& C) const;
  ElementId sortable_of(int i) const { return sortable_of_[i]; }
  int cluster_of_sortable(ElementId w) const;
  int r_value(Apr a) const;
  int R_value(Apr a) const;
  Apr partner(int cluster_index, Apr a) const;
  bool is_upper(int cluster_index, Apr a) const;
  std::vector<Apr> upper_roots(int i) const;
  std::vector<Apr> lower_roots(int i) const;
  /// Quotient covers oriented by R: up_covers[i] lists j with i <. j.
  const std::vector<std::vector<int>>& up_covers() const { return up_covers_; }
  const std::vector<std::vector<int>>& down_covers() const { return down_covers_; }

 private:
  const CoxeterGroup* g_;
  CoxWord c_;
  std::vector<Apr> universe_;
  std::vector<Cluster> clusters_;
  std::map<Cluster, int> index_;
  std::vector<ElementId> sortable_of_;
  std::map<ElementId, int> cluster_of_sortable_;
  std::map<Apr, int> r_, R_;
  std::vector<std::map<Apr, Apr>> partner_;
  std::vector<std::vector<int>> up_covers_, down_covers_;
};

// Bipartite machinery.
Apr tau_pm(const CoxeterGroup& g, const Bipartition& bip, int eps, Apr a);  // eps = +1 / -1
Apr tau_minus(const CoxeterGroup& g, const Bipartition& bip, Apr a);
Apr tau_plus(const CoxeterGroup& g, const Bipartition& bip, Apr a);
/// Smallest k with tau_-^{(k)}(a) negative simple and fixed by the next tau.
int k_minus(const CoxeterGroup& g, const Bipartition& bip, Apr a);
/// -1 iff k_-(a) < k_-(b); +1 otherwise (ties are impossible for
/// exchangeable pairs and raise Internal).
int epsilon_pair(const CoxeterGroup& g, const Bipartition& bip, Apr a, Apr b);

}  // namespace camfan

#endif
