#include "ellchar/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ellchar {

namespace {

void extend(int rest, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(rest, max_part); p >= 1; --p) {
    cur.push_back(p);
    extend(rest - p, p, cur, out);
    cur.pop_back();
  }
}

int size_of(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

long mn_beta(const std::set<int>& beta, const Partition& lambda, std::size_t pos) {
  if (pos == lambda.size()) return 1;
  const int r = lambda[pos];
  long total = 0;
  for (int b : beta) {
    int c = b - r;
    if (c < 0 || beta.count(c)) continue;
    int between = static_cast<int>(std::distance(beta.upper_bound(c), beta.lower_bound(b)));
    std::set<int> next = beta;
    next.erase(b);
    next.insert(c);
    long v = mn_beta(next, lambda, pos + 1);
    total += (between % 2 ? -v : v);
  }
  return total;
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 0) throw std::invalid_argument("negative partition size");
  std::vector<Partition> out;
  Partition cur;
  extend(n, n, cur, out);
  return out;
}

Partition cycle_type(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  Partition t;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.rbegin(), t.rend());
  return t;
}

std::string partition_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s + ")";
}

long mn_character_Sn(const Partition& sigma, const Partition& lambda) {
  if (size_of(sigma) != size_of(lambda)) throw std::invalid_argument("partitions of different sizes");
  std::set<int> beta;
  const int len = static_cast<int>(sigma.size());
  for (int i = 0; i < len; ++i) beta.insert(sigma[i] + (len - 1 - i));
  return mn_beta(beta, lambda, 0);
}

}  // namespace ellchar
