#include "diskpack/star_search.hpp"

#include <algorithm>
#include <numeric>

#include "diskpack/errors.hpp"

namespace diskpack {

std::optional<StarSearchResult> star_wdc_bruteforce(const WeightedStar& s,
                                                    std::optional<double> center_radius,
                                                    std::size_t max_leaves,
                                                    std::optional<double> tol) {
  const std::size_t n = s.leaves.size();
  if (n > max_leaves) {
    throw InputError("instance too large for oracle (" + std::to_string(n) + " leaves, limit " +
                     std::to_string(max_leaves) + ")");
  }
  if (n == 0) throw InputError("star has no leaves");
  std::size_t first = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (s.leaves[i].radius > s.leaves[first].radius) first = i;
  }
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != first) rest.push_back(i);
  }

  WeightedStar trial = s;
  trial.embedded = true;
  std::size_t tried = 0;
  do {
    if (rest.size() >= 2 && rest.front() > rest.back()) continue;
    trial.leaves.clear();
    trial.leaves.push_back(s.leaves[first]);
    for (std::size_t i : rest) trial.leaves.push_back(s.leaves[i]);
    ++tried;
    auto res = decide_and_construct_embedded_star(trial, center_radius, tol);
    if (res.realizable) {
      StarSearchResult out{{}, std::move(*res.packing), tried};
      out.order.push_back(first);
      out.order.insert(out.order.end(), rest.begin(), rest.end());
      return out;
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return std::nullopt;
}

void validate_instance(const ThreePartitionInstance& a) {
  if (a.B <= 0) throw InputError("B must be positive");
  if (a.A.empty() || a.A.size() % 3 != 0) {
    throw InputError("instance size " + std::to_string(a.A.size()) + " is not a positive multiple of 3");
  }
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < a.A.size(); ++i) {
    const std::int64_t x = a.A[i];
    if (!(4 * x > a.B && 2 * x < a.B)) {
      throw InputError("element A[" + std::to_string(i) + "] = " + std::to_string(x) +
                       " is not strictly between B/4 and B/2");
    }
    sum += x;
  }
  const std::int64_t want = a.B * static_cast<std::int64_t>(a.n());
  if (sum != want) {
    throw InputError("elements sum to " + std::to_string(sum) + ", expected n*B = " +
                     std::to_string(want));
  }
}

namespace {

bool search(const std::vector<std::int64_t>& A, std::int64_t B, std::vector<char>& used,
            std::vector<Triple>& out) {
  const std::size_t n = A.size();
  std::size_t i = 0;
  while (i < n && used[i]) ++i;
  if (i == n) return true;
  used[i] = 1;
  std::int64_t last_j = -1;
  for (std::size_t j = i + 1; j < n; ++j) {
    if (used[j] || A[j] == last_j) continue;
    last_j = A[j];
    const std::int64_t need = B - A[i] - A[j];
    used[j] = 1;
    for (std::size_t k = j + 1; k < n; ++k) {
      if (used[k] || A[k] != need) continue;
      used[k] = 1;
      out.push_back({i, j, k});
      if (search(A, B, used, out)) return true;
      out.pop_back();
      used[k] = 0;
      break;  // any other k with the same value is equivalent
    }
    used[j] = 0;
  }
  used[i] = 0;
  return false;
}

}  // namespace

std::optional<std::vector<Triple>> three_partition_bruteforce(const ThreePartitionInstance& a) {
  validate_instance(a);
  // Search over values sorted descending, then map back to input indices.
  std::vector<std::size_t> perm(a.A.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t x, std::size_t y) { return a.A[x] > a.A[y]; });
  std::vector<std::int64_t> sorted;
  for (std::size_t p : perm) sorted.push_back(a.A[p]);
  std::vector<char> used(sorted.size(), 0);
  std::vector<Triple> found;
  if (!search(sorted, a.B, used, found)) return std::nullopt;
  for (auto& t : found) {
    for (auto& x : t) x = perm[x];
    std::sort(t.begin(), t.end());
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace diskpack
