#include "luinv/census.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "luinv/errors.hpp"

namespace luinv {

namespace {

// Tuples are encoded as mixed-radix integers over permutation ranks, first
// permutation most significant, so integer order equals lexicographic order.
class TupleSpace {
 public:
  TupleSpace(int length, int degree)
      : length_(length), perms_(all_permutations(degree)), count_(1) {
    const std::size_t n = perms_.size();
    for (int i = 0; i < length; ++i) count_ *= n;

    std::map<Permutation, std::uint32_t> rank;
    for (std::size_t i = 0; i < n; ++i) rank.emplace(perms_[i], static_cast<std::uint32_t>(i));

    // Conjugation by each adjacent transposition (i i+1); these generate S_degree.
    for (int i = 0; i + 1 < degree; ++i) {
      Permutation s = identity_permutation(degree);
      std::swap(s[i], s[i + 1]);
      std::vector<std::uint32_t> table(n);
      for (std::size_t p = 0; p < n; ++p) table[p] = rank.at(compose(compose(s, perms_[p]), s));
      conjugators_.push_back(std::move(table));
    }
  }

  std::uint64_t size() const { return count_; }
  const std::vector<std::vector<std::uint32_t>>& conjugators() const { return conjugators_; }

  std::vector<std::uint32_t> decode(std::uint64_t code) const {
    std::vector<std::uint32_t> digits(length_);
    for (int i = length_ - 1; i >= 0; --i) {
      digits[i] = static_cast<std::uint32_t>(code % perms_.size());
      code /= perms_.size();
    }
    return digits;
  }

  std::uint64_t encode(const std::vector<std::uint32_t>& digits) const {
    std::uint64_t code = 0;
    for (std::uint32_t d : digits) code = code * perms_.size() + d;
    return code;
  }

  PermTuple to_tuple(std::uint64_t code, int degree) const {
    PermTuple t{degree, {}};
    for (std::uint32_t d : decode(code)) t.perms.push_back(perms_[d]);
    return t;
  }

 private:
  int length_;
  const std::vector<Permutation>& perms_;
  std::uint64_t count_;
  std::vector<std::vector<std::uint32_t>> conjugators_;
};

class DisjointSets {
 public:
  explicit DisjointSets(std::uint64_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::uint64_t find(std::uint64_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // The smaller code becomes the root, so each root is its orbit's minimum.
  void unite(std::uint64_t a, std::uint64_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) parent_[b] = a;
    else parent_[a] = b;
  }

 private:
  std::vector<std::uint64_t> parent_;
};

void check_bound(int length, int degree, double bound) {
  const double n = tuple_count(length, degree);
  if (n > bound) {
    std::ostringstream msg;
    msg << "refusing to enumerate " << degree << "!^" << length << " = " << n
        << " permutation tuples (limit " << bound << ")";
    throw EnumerationBoundError(msg.str(), n);
  }
}

std::vector<std::uint64_t> orbit_roots(int length, int degree, bool transitive_only, double bound) {
  if (length < 0) throw std::invalid_argument("tuple length must be nonnegative");
  if (degree < 1) throw std::invalid_argument("degree must be at least 1");
  check_bound(length, degree, bound);

  const TupleSpace space(length, degree);
  std::vector<char> keep(space.size(), 1);
  if (transitive_only)
    for (std::uint64_t c = 0; c < space.size(); ++c) keep[c] = is_transitive(space.to_tuple(c, degree));

  DisjointSets sets(space.size());
  for (std::uint64_t c = 0; c < space.size(); ++c) {
    if (!keep[c]) continue;
    const auto digits = space.decode(c);
    for (const auto& table : space.conjugators()) {
      auto image = digits;
      for (auto& d : image) d = table[d];
      sets.unite(c, space.encode(image));
    }
  }

  std::vector<std::uint64_t> roots;
  for (std::uint64_t c = 0; c < space.size(); ++c)
    if (keep[c] && sets.find(c) == c) roots.push_back(c);
  return roots;
}

}  // namespace

double tuple_count(int length, int degree) {
  double f = 1;
  for (int i = 2; i <= degree; ++i) f *= i;
  return std::pow(f, length);
}

bool is_transitive(const PermTuple& t) {
  if (t.degree <= 1) return true;
  std::vector<char> reached(static_cast<std::size_t>(t.degree), 0);
  std::vector<int> stack{0};
  reached[0] = 1;
  int seen = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (const auto& p : t.perms) {
      if (p.size() != static_cast<std::size_t>(t.degree)) throw std::invalid_argument("tuple degree mismatch");
      const int y = p[x];
      if (!reached[y]) {
        reached[y] = 1;
        ++seen;
        stack.push_back(y);
      }
    }
  }
  return seen == t.degree;
}

std::uint64_t count_subgroup_classes(int rank, int index, double bound) {
  if (rank < 1) throw std::invalid_argument("free group rank must be at least 1");
  return orbit_roots(rank, index, true, bound).size();
}

std::uint64_t conjugation_orbit_count(int tuple_length, int m, double bound) {
  if (m == 0) return 1;  // S_0 is trivial: one empty tuple
  return orbit_roots(tuple_length, m, false, bound).size();
}

std::vector<PermTuple> conjugation_orbit_representatives(int tuple_length, int m, bool transitive_only,
                                                         double bound) {
  const auto roots = orbit_roots(tuple_length, m, transitive_only, bound);
  const TupleSpace space(tuple_length, m);
  std::vector<PermTuple> out;
  for (std::uint64_t code : roots)
    out.push_back(space.to_tuple(code, m));
  return out;
}

}  // namespace luinv
