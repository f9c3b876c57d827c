#include "apkit/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace apkit {

namespace {

long long normalize_mod(long long v, long long n) {
  long long r = v % n;
  return r < 0 ? r + n : r;
}

// Longest valid block length for step m in Z_n.
long long max_block_length(long long m, long long n) {
  const long long step = normalize_mod(m, n);
  return n / std::gcd(step == 0 ? n : step, n);
}

}  // namespace

bool ApBlock::is_valid() const {
  if (modulus < 1 || length < 1) return false;
  if (start < 0 || start >= modulus) return false;
  return length <= max_block_length(diff, modulus);
}

std::vector<long long> ApBlock::elements() const {
  std::vector<long long> out;
  out.reserve(static_cast<std::size_t>(length));
  const long long step = normalize_mod(diff, modulus);
  long long x = start;
  for (long long i = 0; i < length; ++i) {
    out.push_back(x);
    x = (x + step) % modulus;
  }
  return out;
}

PartitionType ApPartition::type() const {
  std::vector<long long> counts;
  for (const ApBlock& b : blocks) {
    if (static_cast<std::size_t>(b.length) > counts.size())
      counts.resize(static_cast<std::size_t>(b.length), 0);
    ++counts[static_cast<std::size_t>(b.length - 1)];
  }
  return PartitionType(std::move(counts));
}

std::vector<std::pair<long long, long long>> ApPartition::key() const {
  std::vector<std::pair<long long, long long>> k;
  k.reserve(blocks.size());
  for (const ApBlock& b : blocks) k.emplace_back(b.start, b.length);
  std::sort(k.begin(), k.end());
  return k;
}

bool ApPartition::is_exact_cover() const {
  std::vector<int> hits(static_cast<std::size_t>(modulus), 0);
  for (const ApBlock& b : blocks) {
    if (b.modulus != modulus || !b.is_valid()) return false;
    for (long long e : b.elements()) ++hits[static_cast<std::size_t>(e)];
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

std::string to_string(const ApPartition& part) {
  std::string out = "{";
  for (std::size_t i = 0; i < part.blocks.size(); ++i) {
    if (i > 0) out.push_back(',');
    out.push_back('(');
    const std::vector<long long> elems = part.blocks[i].elements();
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (j > 0) out.push_back(',');
      out += std::to_string(elems[j]);
    }
    out.push_back(')');
  }
  out.push_back('}');
  return out;
}

void SeparationSpec::validate() const {
  if (n < 1 || k < 0 || m < 1 || p < 1)
    throw std::domain_error("SeparationSpec: need n >= 1, k >= 0, m >= 1, p >= 1");
}

std::vector<bool> SeparationSpec::forbidden() const {
  std::vector<bool> forb(static_cast<std::size_t>(n), false);
  for (long long q = 1; q <= p; ++q) forb[static_cast<std::size_t>((q * (m % n)) % n)] = true;
  return forb;
}

namespace {

struct ApSearch {
  long long n;
  long long step;       // difference reduced mod n
  long long max_nodes;  // 0 = unlimited
  long long nodes = 0;
  std::vector<long long> remaining;              // per length, 1-indexed via [L-1]
  std::vector<char> covered;
  std::vector<std::pair<long long, long long>> chosen;  // (start, length)
  const std::function<bool(const std::vector<std::pair<long long, long long>>&)>* emit;
  bool stopped = false;

  // Branch on the smallest uncovered element; a candidate block may cover it
  // at any internal position j (start = x - j*step), which is what finds the
  // wrap-around blocks.
  void run(long long num_covered, long long scan_from) {
    if (stopped) return;
    if (num_covered == n) {
      if (!(*emit)(chosen)) stopped = true;
      return;
    }
    long long x = scan_from;
    while (covered[static_cast<std::size_t>(x)]) ++x;
    for (long long L = 1; L <= static_cast<long long>(remaining.size()); ++L) {
      if (remaining[static_cast<std::size_t>(L - 1)] <= 0) continue;
      for (long long j = 0; j < L; ++j) {
        if (max_nodes > 0 && ++nodes > max_nodes)
          throw std::runtime_error("enumeration budget exceeded");
        const long long start = normalize_mod(x - j * step, n);
        bool free = true;
        long long e = start;
        for (long long i = 0; i < L; ++i) {
          if (covered[static_cast<std::size_t>(e)]) {
            free = false;
            break;
          }
          e = (e + step) % n;
        }
        if (!free) continue;
        e = start;
        for (long long i = 0; i < L; ++i) {
          covered[static_cast<std::size_t>(e)] = 1;
          e = (e + step) % n;
        }
        --remaining[static_cast<std::size_t>(L - 1)];
        chosen.emplace_back(start, L);
        run(num_covered + L, x);
        chosen.pop_back();
        ++remaining[static_cast<std::size_t>(L - 1)];
        e = start;
        for (long long i = 0; i < L; ++i) {
          covered[static_cast<std::size_t>(e)] = 0;
          e = (e + step) % n;
        }
        if (stopped) return;
      }
    }
  }
};

long long search_ap_partitions(
    long long n, long long m, const PartitionType& t, long long max_nodes,
    const std::function<bool(const std::vector<std::pair<long long, long long>>&)>& emit) {
  if (n < 1) throw std::domain_error("enumerate: n must be >= 1");
  if (m < 1) throw std::domain_error("enumerate: m must be >= 1");
  if (!t.binds(n)) throw std::domain_error("enumerate: type does not bind n (sum i*k_i != n)");
  // Infeasible when some required length exceeds a coset: no partitions.
  const long long lmax = max_block_length(m, n);
  for (long long i = lmax + 1; i <= t.max_part(); ++i)
    if (t.k(i) > 0) return 0;

  ApSearch s;
  s.n = n;
  s.step = normalize_mod(m, n);
  s.max_nodes = max_nodes;
  s.remaining = t.counts();
  s.covered.assign(static_cast<std::size_t>(n), 0);
  long long count = 0;
  std::function<bool(const std::vector<std::pair<long long, long long>>&)> counting =
      [&](const std::vector<std::pair<long long, long long>>& blocks) {
        ++count;
        return emit(blocks);
      };
  s.emit = &counting;
  s.run(0, 0);
  return count;
}

ApPartition make_partition(long long n, long long m,
                           std::vector<std::pair<long long, long long>> blocks) {
  std::sort(blocks.begin(), blocks.end());
  ApPartition part;
  part.modulus = n;
  part.difference = normalize_mod(m, n);
  part.blocks.reserve(blocks.size());
  for (const auto& [start, length] : blocks)
    part.blocks.push_back({start, length, part.difference, n});
  return part;
}

}  // namespace

long long visit_ap_partitions(long long n, long long m, const PartitionType& t,
                              const std::function<bool(const ApPartition&)>& visit) {
  return search_ap_partitions(n, m, t, 0,
                              [&](const std::vector<std::pair<long long, long long>>& blocks) {
                                return visit(make_partition(n, m, blocks));
                              });
}

std::vector<ApPartition> enumerate_ap_partitions(long long n, long long m,
                                                 const PartitionType& t) {
  std::vector<ApPartition> out;
  search_ap_partitions(n, m, t, 0,
                       [&](const std::vector<std::pair<long long, long long>>& blocks) {
                         out.push_back(make_partition(n, m, blocks));
                         return true;
                       });
  std::sort(out.begin(), out.end());
  return out;
}

long long count_ap_partitions(long long n, long long m, const PartitionType& t,
                              long long max_nodes) {
  return search_ap_partitions(
      n, m, t, max_nodes,
      [](const std::vector<std::pair<long long, long long>>&) { return true; });
}

long long visit_separated_subsets(
    const SeparationSpec& spec,
    const std::function<bool(const std::vector<long long>&)>& visit) {
  spec.validate();
  if (spec.k > spec.n) return 0;  // empty stream, not an error
  const std::vector<bool> forb = spec.forbidden();
  std::vector<long long> chosen;
  chosen.reserve(static_cast<std::size_t>(spec.k));
  if (spec.k >= 1 && forb[0]) return 0;  // 0 is a forbidden difference: i = j pairs fail
  long long count = 0;
  bool stopped = false;
  auto rec = [&](auto&& self, long long next) -> void {
    if (stopped) return;
    if (static_cast<long long>(chosen.size()) == spec.k) {
      ++count;
      if (!visit(chosen)) stopped = true;
      return;
    }
    const long long needed = spec.k - static_cast<long long>(chosen.size());
    for (long long c = next; c <= spec.n - needed; ++c) {
      bool ok = true;
      for (long long x : chosen) {
        if (forb[static_cast<std::size_t>((c - x) % spec.n)] ||
            forb[static_cast<std::size_t>(normalize_mod(x - c, spec.n))]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(c);
      self(self, c + 1);
      chosen.pop_back();
      if (stopped) return;
    }
  };
  rec(rec, 0);
  return count;
}

std::vector<std::vector<long long>> enumerate_separated_subsets(const SeparationSpec& spec) {
  std::vector<std::vector<long long>> out;
  visit_separated_subsets(spec, [&](const std::vector<long long>& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

long long count_separated_subsets(const SeparationSpec& spec) {
  return visit_separated_subsets(spec, [](const std::vector<long long>&) { return true; });
}

std::vector<long long> partition_to_subset(const ApPartition& part, long long p) {
  if (p < 1) throw std::domain_error("partition_to_subset: p must be >= 1");
  std::vector<long long> subset;
  for (const ApBlock& b : part.blocks) {
    if (b.length == p + 1)
      subset.push_back(b.start);
    else if (b.length != 1)
      throw std::domain_error("partition_to_subset: block length " + std::to_string(b.length) +
                              " is neither 1 nor p+1");
  }
  std::sort(subset.begin(), subset.end());
  return subset;
}

ApPartition subset_to_partition(long long n, long long m, long long p,
                                const std::vector<long long>& subset) {
  SeparationSpec spec{n, static_cast<long long>(subset.size()), m, p};
  spec.validate();
  if (n < (p + 1) * spec.k) throw std::domain_error("subset_to_partition: n < (p+1)k");
  const std::vector<bool> forb = spec.forbidden();
  for (long long x : subset) {
    if (x < 0 || x >= n) throw std::domain_error("subset_to_partition: element out of range");
    for (long long y : subset)
      if (forb[static_cast<std::size_t>(normalize_mod(x - y, n))])
        throw std::domain_error("subset_to_partition: subset violates the separation constraints");
  }

  std::vector<char> in_block(static_cast<std::size_t>(n), 0);
  std::vector<std::pair<long long, long long>> blocks;
  const long long step = normalize_mod(m, n);
  for (long long x : subset) {
    blocks.emplace_back(x, p + 1);
    long long e = x;
    for (long long i = 0; i <= p; ++i) {
      if (in_block[static_cast<std::size_t>(e)])
        throw std::logic_error("subset_to_partition: blocks collide");
      in_block[static_cast<std::size_t>(e)] = 1;
      e = (e + step) % n;
    }
  }
  for (long long x = 0; x < n; ++x)
    if (!in_block[static_cast<std::size_t>(x)]) blocks.emplace_back(x, 1);
  ApPartition part = make_partition(n, m, std::move(blocks));
  if (!part.is_exact_cover()) throw std::logic_error("subset_to_partition: not an exact cover");
  return part;
}

ApPartition scale_partition(const ApPartition& part, long long a) {
  const long long n = part.modulus;
  if (std::gcd(normalize_mod(a, n) == 0 ? n : normalize_mod(a, n), n) != 1)
    throw std::domain_error("scale_partition: not a unit of Z_n");
  std::vector<std::pair<long long, long long>> blocks;
  blocks.reserve(part.blocks.size());
  for (const ApBlock& b : part.blocks)
    blocks.emplace_back(normalize_mod(a * b.start, n), b.length);
  ApPartition scaled = make_partition(n, a * part.difference, std::move(blocks));
  if (!scaled.is_exact_cover()) throw std::logic_error("scale_partition: scaling broke the cover");
  return scaled;
}

std::vector<ApPartition> residue_decompose(const ApPartition& part) {
  const long long n = part.modulus;
  const long long m = part.difference == 0 ? n : part.difference;
  if (n % m != 0) throw std::domain_error("residue_decompose: difference does not divide n");
  const long long n1 = n / m;
  std::vector<std::vector<std::pair<long long, long long>>> per_class(
      static_cast<std::size_t>(m));
  for (const ApBlock& b : part.blocks) {
    const long long j = b.start % m;
    per_class[static_cast<std::size_t>(j)].emplace_back((b.start - j) / m, b.length);
  }
  std::vector<ApPartition> components;
  components.reserve(static_cast<std::size_t>(m));
  for (long long j = 0; j < m; ++j) {
    ApPartition comp = make_partition(n1, 1, std::move(per_class[static_cast<std::size_t>(j)]));
    if (!comp.is_exact_cover())
      throw std::logic_error("residue_decompose: component is not a partition of Z_{n/m}");
    components.push_back(std::move(comp));
  }
  return components;
}

ApPartition residue_compose(long long n, long long m, const std::vector<ApPartition>& components) {
  if (n < 1 || m < 1) throw std::domain_error("residue_compose: bad modulus or difference");
  const long long step = normalize_mod(m, n);
  const long long m_eff = step == 0 ? n : step;
  if (n % m_eff != 0) throw std::domain_error("residue_compose: difference does not divide n");
  const long long n1 = n / m_eff;
  if (static_cast<long long>(components.size()) != m_eff)
    throw std::domain_error("residue_compose: expected one component per residue class");
  std::vector<std::pair<long long, long long>> blocks;
  for (long long j = 0; j < m_eff; ++j) {
    const ApPartition& comp = components[static_cast<std::size_t>(j)];
    if (comp.modulus != n1)
      throw std::domain_error("residue_compose: component modulus mismatch");
    for (const ApBlock& b : comp.blocks) blocks.emplace_back(m_eff * b.start + j, b.length);
  }
  ApPartition part = make_partition(n, m, std::move(blocks));
  if (!part.is_exact_cover()) throw std::domain_error("residue_compose: not an exact cover");
  return part;
}

}  // namespace apkit
