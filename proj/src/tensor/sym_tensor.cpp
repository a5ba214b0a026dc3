#include "hc/tensor/sym_tensor.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hc {

namespace {

void fill_indices(int dim, int rank, int start, MultiIndex& cur, std::vector<MultiIndex>& out) {
  if (static_cast<int>(cur.size()) == rank) {
    out.push_back(cur);
    return;
  }
  for (int v = start; v < dim; ++v) {
    cur.push_back(v);
    fill_indices(dim, rank, v, cur, out);
    cur.pop_back();
  }
}

MultiIndex merged(MultiIndex a, const MultiIndex& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

void require_same_shape(const SymTensor& a, const SymTensor& b) {
  if (a.dim() != b.dim() || a.rank() != b.rank()) throw std::invalid_argument("tensor shape mismatch");
}

// ways to pick p unordered pairs out of n equal slots
Integer pair_ways(int n, int p) {
  return factorial(n) / (factorial(n - 2 * p) * (Integer(1) << p) * factorial(p));
}

void distribute_pairs(const std::vector<int>& counts, int v, int left, std::vector<int>& pairs,
                      const std::function<void()>& visit) {
  if (v == static_cast<int>(counts.size())) {
    if (left == 0) visit();
    return;
  }
  for (int p = 0; 2 * p <= counts[v] && p <= left; ++p) {
    pairs[v] = p;
    distribute_pairs(counts, v + 1, left - p, pairs, visit);
  }
  pairs[v] = 0;
}

}  // namespace

std::vector<MultiIndex> sorted_indices(int dim, int rank) {
  if (rank < 0) throw std::invalid_argument("negative rank");
  std::vector<MultiIndex> out;
  MultiIndex cur;
  fill_indices(dim, rank, 0, cur, out);
  return out;
}

std::vector<int> index_counts(const MultiIndex& index, int dim) {
  std::vector<int> c(static_cast<std::size_t>(dim), 0);
  for (int v : index) ++c.at(static_cast<std::size_t>(v));
  return c;
}

Integer multiplicity(const MultiIndex& index, int dim) {
  Integer m = factorial(static_cast<long>(index.size()));
  for (int c : index_counts(index, dim)) m /= factorial(c);
  return m;
}

SymTensor::SymTensor(int dim, int rank) : dim_(dim), rank_(rank) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("tensor dimension must be in 1..4");
  if (rank < 0) throw std::invalid_argument("negative rank");
}

SymTensor SymTensor::scalar(const RadialForm& f) {
  SymTensor t(f.dim(), 0);
  t.set({}, f);
  return t;
}

void SymTensor::check_index(const MultiIndex& index) const {
  if (static_cast<int>(index.size()) != rank_) throw std::invalid_argument("index length differs from rank");
  for (int v : index) {
    if (v < 0 || v >= dim_) throw std::out_of_range("tensor index out of range");
  }
}

RadialForm SymTensor::at(MultiIndex index) const {
  check_index(index);
  std::sort(index.begin(), index.end());
  auto it = comps_.find(index);
  return it == comps_.end() ? RadialForm(dim_) : it->second;
}

void SymTensor::set(MultiIndex index, const RadialForm& f) {
  check_index(index);
  if (f.dim() != dim_) throw std::invalid_argument("component dimension mismatch");
  std::sort(index.begin(), index.end());
  if (f.is_zero()) {
    comps_.erase(index);
  } else {
    comps_.insert_or_assign(std::move(index), f);
  }
}

RadialForm SymTensor::value() const {
  if (rank_ != 0) throw std::invalid_argument("value() needs a rank-0 tensor");
  return at({});
}

SymTensor& SymTensor::operator+=(const SymTensor& o) {
  require_same_shape(*this, o);
  for (const auto& [idx, f] : o.comps_) set(idx, at(idx) + f);
  return *this;
}

SymTensor& SymTensor::operator-=(const SymTensor& o) {
  require_same_shape(*this, o);
  for (const auto& [idx, f] : o.comps_) set(idx, at(idx) - f);
  return *this;
}

SymTensor SymTensor::scaled(const ExactScalar& c) const {
  return map([&](const RadialForm& f) { return f.scaled(c); });
}

SymTensor SymTensor::times(const RadialForm& g) const {
  return map([&](const RadialForm& f) { return f * g; });
}

SymTensor SymTensor::map(const std::function<RadialForm(const RadialForm&)>& fn) const {
  SymTensor out(dim_, rank_);
  for (const auto& [idx, f] : comps_) out.set(idx, fn(f));
  return out;
}

bool operator==(const SymTensor& a, const SymTensor& b) {
  if (a.dim_ != b.dim_ || a.rank_ != b.rank_ || a.comps_.size() != b.comps_.size()) return false;
  for (const auto& [idx, f] : a.comps_) {
    auto it = b.comps_.find(idx);
    if (it == b.comps_.end() || !(it->second == f)) return false;
  }
  return true;
}

std::optional<ExactScalar> proportionality(const SymTensor& a, const SymTensor& b) {
  if (a.dim_ != b.dim_ || a.rank_ != b.rank_) return std::nullopt;
  if (b.is_zero()) return a.is_zero() ? std::optional<ExactScalar>(ExactScalar(1)) : std::nullopt;
  if (a.is_zero()) return ExactScalar(0);
  const auto& [idx0, f0] = *b.comps_.begin();
  const std::optional<ExactScalar> c = proportionality(a.at(idx0), f0);
  if (!c) return std::nullopt;
  if (a == b.scaled(*c)) return c;
  return std::nullopt;
}

std::string SymTensor::str() const {
  std::ostringstream os;
  os << "SymTensor(dim=" << dim_ << ", rank=" << rank_ << ")";
  for (const auto& [idx, f] : comps_) {
    os << "\n  [";
    for (std::size_t j = 0; j < idx.size(); ++j) os << (j ? "," : "") << idx[j] + 1;
    os << "] " << f.str();
  }
  return os.str();
}

SymTensor tensor_power(int l, int dim) {
  SymTensor t(dim, l);
  for (const auto& idx : sorted_indices(dim, l)) {
    RadialForm f = RadialForm::constant(dim, ExactScalar(1));
    for (int v : idx) f *= RadialForm::coordinate(dim, v);
    t.set(idx, f);
  }
  return t;
}

SymTensor kronecker(int dim) {
  SymTensor t(dim, 2);
  for (int i = 0; i < dim; ++i) t.set({i, i}, RadialForm::constant(dim, ExactScalar(1)));
  return t;
}

SymTensor symmetrize(int delta_count, const SymTensor& t) {
  if (delta_count < 0) throw std::invalid_argument("negative delta count");
  const int dim = t.dim();
  const int rank = 2 * delta_count + t.rank();
  SymTensor out(dim, rank);
  for (const auto& idx : sorted_indices(dim, rank)) {
    const std::vector<int> counts = index_counts(idx, dim);
    std::vector<int> pairs(counts.size(), 0);
    RadialForm acc(dim);
    distribute_pairs(counts, 0, delta_count, pairs, [&] {
      Integer ways = 1;
      MultiIndex rest;
      for (int v = 0; v < dim; ++v) {
        ways *= pair_ways(counts[v], pairs[v]);
        rest.insert(rest.end(), static_cast<std::size_t>(counts[v] - 2 * pairs[v]), v);
      }
      const RadialForm f = t.at(rest);
      if (!f.is_zero()) acc += f.scaled(ExactScalar(Rational(ways)));
    });
    out.set(idx, acc);
  }
  return out;
}

SymTensor trace(const SymTensor& t) {
  if (t.rank() < 2) throw std::invalid_argument("trace needs rank >= 2");
  SymTensor out(t.dim(), t.rank() - 2);
  for (const auto& idx : sorted_indices(t.dim(), t.rank() - 2)) {
    RadialForm acc(t.dim());
    for (int i = 0; i < t.dim(); ++i) acc += t.at(merged(idx, {i, i}));
    out.set(idx, acc);
  }
  return out;
}

SymTensor trace(const SymTensor& t, int first, int second) {
  if (t.rank() < 2) throw std::invalid_argument("trace needs rank >= 2");
  if (first == second || first < 0 || second < 0 || first >= t.rank() || second >= t.rank()) {
    throw std::invalid_argument("invalid trace pair");
  }
  return trace(t);
}

SymTensor contract(const SymTensor& a, const SymTensor& b, int count) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch in contraction");
  if (count != a.rank() || a.rank() > b.rank()) {
    throw std::invalid_argument("invalid pairing: every index of the first tensor must be contracted");
  }
  const int dim = a.dim();
  SymTensor out(dim, b.rank() - count);
  for (const auto& rest : sorted_indices(dim, b.rank() - count)) {
    RadialForm acc(dim);
    for (const auto& [k, fa] : a.components()) {
      const RadialForm fb = b.at(merged(k, rest));
      if (fb.is_zero()) continue;
      acc += (fa * fb).scaled(ExactScalar(Rational(multiplicity(k, dim))));
    }
    out.set(rest, acc);
  }
  return out;
}

SymTensor divergence(const SymTensor& t) {
  if (t.rank() < 1) throw std::invalid_argument("divergence needs rank >= 1");
  SymTensor out(t.dim(), t.rank() - 1);
  for (const auto& idx : sorted_indices(t.dim(), t.rank() - 1)) {
    RadialForm acc(t.dim());
    for (int i = 0; i < t.dim(); ++i) acc += derivative(t.at(merged(idx, {i})), i);
    out.set(idx, acc);
  }
  return out;
}

SymTensor raise(const SymTensor& t, const std::function<RadialForm(int, const RadialForm&)>& op) {
  const int dim = t.dim();
  SymTensor out(dim, t.rank() + 1);
  for (const auto& idx : sorted_indices(dim, t.rank() + 1)) {
    std::optional<RadialForm> value;
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (j > 0 && idx[j] == idx[j - 1]) continue;
      MultiIndex rest = idx;
      rest.erase(rest.begin() + static_cast<long>(j));
      RadialForm f = op(idx[j], t.at(rest));
      if (!value) {
        value = std::move(f);
      } else if (!(*value == f)) {
        throw std::domain_error("raised tensor is not symmetric");
      }
    }
    out.set(idx, *value);
  }
  return out;
}

SymTensor gradient(const SymTensor& t) {
  return raise(t, [](int i, const RadialForm& f) { return derivative(f, i); });
}

RadialForm contract_vectors(const SymTensor& t, const std::vector<std::vector<ExactScalar>>& vectors) {
  const int dim = t.dim();
  if (static_cast<int>(vectors.size()) != t.rank()) throw std::invalid_argument("need one vector per index");
  // Expand prod_j (v_j . e) in formal variables e_i; the coefficient of e^K
  // collects every ordering of the multiset K.
  Poly prod = Poly::constant(dim, ExactScalar(1));
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != dim) throw std::invalid_argument("vector length differs from dimension");
    Poly lin(dim);
    for (int i = 0; i < dim; ++i) lin += Poly::coordinate(dim, i).scaled(v[static_cast<std::size_t>(i)]);
    prod = prod * lin;
  }
  RadialForm acc(dim);
  for (const auto& [m, c] : prod.terms()) {
    MultiIndex k;
    for (int i = 0; i < dim; ++i) k.insert(k.end(), m.exps[i], i);
    acc += t.at(k).scaled(c);
  }
  return acc;
}

}  // namespace hc
