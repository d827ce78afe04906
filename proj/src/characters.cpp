#include "latwalk/characters.hpp"

#include "latwalk/egf.hpp"
#include "latwalk/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace latwalk {

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

int partition_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

std::vector<Partition> partitions_of(int n) {
  if (n < 0) fail(errc::invalid_argument, "partitions of a negative integer");
  std::vector<Partition> out;
  Partition cur;
  // Largest part first, each next part no larger than the previous.
  auto rec = [&](auto&& self, int rest, int cap) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(rest, cap); part >= 1; --part) {
      cur.push_back(part);
      self(self, rest - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

Partition cycle_type(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(static_cast<size_t>(n), false);
  Partition type;
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<size_t>(start)]) continue;
    int len = 0;
    for (int v = start; !seen[static_cast<size_t>(v)]; v = perm[static_cast<size_t>(v)]) {
      if (v < 0 || v >= n) fail(errc::invalid_argument, "not a permutation");
      seen[static_cast<size_t>(v)] = true;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

BigInt conjugacy_class_size(const Partition& mu) {
  if (!is_partition(mu)) fail(errc::invalid_argument, "not a partition");
  const int n = partition_size(mu);
  BigInt fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  // Centralizer order: prod over part sizes i of i^{m_i} m_i!.
  BigInt z = 1;
  for (size_t i = 0; i < mu.size();) {
    size_t j = i;
    BigInt count = 0;
    while (j < mu.size() && mu[j] == mu[i]) {
      ++count;
      z *= mu[i];
      z *= count;
      ++j;
    }
    i = j;
  }
  return exact_div(fact, z);
}

namespace {

// Beta-set encoding: b_i = lambda_i + (len - 1 - i), strictly decreasing.
std::vector<int> beta_set(const Partition& lambda) {
  const int len = static_cast<int>(lambda.size());
  std::vector<int> beta(static_cast<size_t>(len));
  for (int i = 0; i < len; ++i) beta[static_cast<size_t>(i)] = lambda[static_cast<size_t>(i)] + (len - 1 - i);
  return beta;
}

Partition from_beta(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  // Strip trailing zeros of the staircase.
  Partition lambda;
  const int len = static_cast<int>(beta.size());
  for (int i = 0; i < len; ++i) {
    int part = beta[static_cast<size_t>(i)] - (len - 1 - i);
    if (part > 0) lambda.push_back(part);
  }
  return lambda;
}

long long mn_recurse(const Partition& lambda, const Partition& mu,
                     std::map<std::pair<Partition, Partition>, long long>& memo) {
  if (lambda.empty()) return 1; // mu is empty too by the size invariant
  auto key = std::make_pair(lambda, mu);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const int strip = mu.front();
  const Partition rest(mu.begin() + 1, mu.end());
  long long acc = 0;
  auto beta = beta_set(lambda);
  for (size_t i = 0; i < beta.size(); ++i) {
    const int lowered = beta[i] - strip;
    if (lowered < 0) continue;
    bool occupied = false;
    int height = 0; // entries strictly between lowered and beta[i]
    for (size_t j = 0; j < beta.size(); ++j) {
      if (j == i) continue;
      if (beta[j] == lowered) occupied = true;
      if (beta[j] > lowered && beta[j] < beta[i]) ++height;
    }
    if (occupied) continue;
    auto next = beta;
    next[i] = lowered;
    const long long sign = height % 2 == 0 ? 1 : -1;
    acc += sign * mn_recurse(from_beta(next), rest, memo);
  }
  memo.emplace(std::move(key), acc);
  return acc;
}

} // namespace

long long sn_character(const Partition& lambda, const Partition& mu) {
  if (!is_partition(lambda) || !is_partition(mu))
    fail(errc::invalid_argument, "character arguments must be partitions");
  if (partition_size(lambda) != partition_size(mu))
    fail(errc::invalid_argument, "character shape and class must partition the same integer");
  static std::map<std::pair<Partition, Partition>, long long> memo;
  static std::mutex memo_mutex;
  std::lock_guard<std::mutex> lock(memo_mutex);
  return mn_recurse(lambda, mu, memo);
}

} // namespace latwalk
