#include "wkit/search.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <utility>

#include "wkit/theorems.hpp"

namespace wkit {

std::size_t order_cap() {
  const char* env = std::getenv("WKIT_MAX_N");
  if (env == nullptr || *env == '\0') return kDefaultOrderCap;
  const std::string_view text(env);
  std::size_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0 ||
      value > kMaxOrder) {
    throw ConfigError("WKIT_MAX_N must be an integer in [1, " +
                      std::to_string(kMaxOrder) + "], got '" +
                      std::string(text) + "'");
  }
  return value;
}

void enumerate_symmetric(
    std::size_t n, const std::function<void(const PmOneSequence&)>& visit) {
  if (n == 0 || n > kMaxOrder) {
    throw StructuralError("order " + std::to_string(n) + " outside [1, " +
                          std::to_string(kMaxOrder) + "]");
  }
  const std::size_t free = n / 2 + 1;
  std::vector<int> entries(n);
  for (std::uint64_t t = 0; t < (std::uint64_t{1} << free); ++t) {
    // Most significant bit of t drives entry 0, so t ascending is
    // lexicographic with '+' first.
    for (std::size_t j = 0; j < free; ++j) {
      entries[j] = ((t >> (free - 1 - j)) & 1U) ? -1 : 1;
    }
    for (std::size_t j = free; j < n; ++j) entries[j] = entries[n - j];
    visit(PmOneSequence(entries));
  }
}

std::vector<PmOneSequence> enumerate_symmetric(std::size_t n) {
  std::vector<PmOneSequence> out;
  enumerate_symmetric(n, [&out](const PmOneSequence& s) { out.push_back(s); });
  return out;
}

std::vector<RowSums> rowsum_prefilter(std::size_t n) {
  const int order = static_cast<int>(n);
  const int target = 4 * order;
  const int first = -order;  // steps of 2 keep s == n (mod 2)
  std::vector<RowSums> out;
  for (int a = first; a <= order; a += 2) {
    for (int b = first; b <= order; b += 2) {
      for (int c = first; c <= order; c += 2) {
        const int rest = target - a * a - b * b - c * c;
        if (rest < 0) continue;
        for (int d = first; d <= order; d += 2) {
          if (d * d == rest) out.push_back({a, b, c, d});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

WilliamsonQuadruple canonicalize(const WilliamsonQuadruple& q) {
  // Negations act independently per member and any permutation is allowed,
  // so the minimum is the sorted list of each member's smaller sign variant.
  std::array<PmOneSequence, 4> members{q.a(), q.b(), q.c(), q.d()};
  for (auto& s : members) {
    PmOneSequence neg = s.negated();
    if (neg.to_text() < s.to_text()) s = std::move(neg);
  }
  std::sort(members.begin(), members.end(),
            [](const PmOneSequence& x, const PmOneSequence& y) {
              return x.to_text() < y.to_text();
            });
  return WilliamsonQuadruple(members[0], members[1], members[2], members[3]);
}

namespace {

// Precomputed per-sequence data for the inner loops.
struct Candidate {
  PmOneSequence seq;
  std::vector<int> paf;  // shifts 1..n/2
  int row_sum;
  std::uint64_t negative_mask;
  std::vector<int> compressed;  // empty for odd n
};

struct Hit {
  std::uint32_t a, b, c, d;
};

struct BlockOutput {
  std::vector<Hit> hits;
  PruneCounts pruned;
  std::uint64_t examined = 0;
  std::uint64_t paf_tested = 0;
};

class Searcher {
 public:
  explicit Searcher(const SearchConfig& cfg) : cfg_(cfg) {
    const std::size_t n = cfg.n;
    enumerate_symmetric(n, [&](const PmOneSequence& s) {
      Candidate c{s, {}, row_sum(s), s.negative_mask(), {}};
      for (std::size_t k = 1; k <= n / 2; ++k) c.paf.push_back(paf(s, k));
      if (n % 2 == 0) {
        const CompressedSequence comp = compress2(s);
        c.compressed.assign(comp.entries().begin(), comp.entries().end());
      }
      candidates_.push_back(std::move(c));
    });
    for (std::uint32_t i = 0; i < candidates_.size(); ++i) {
      cells_[candidates_[i].row_sum].push_back(i);
    }
    for (const RowSums& r : rowsum_prefilter(n)) {
      admissible_[{r[0], r[1], r[2]}].push_back(r[3]);
    }
  }

  std::size_t size() const noexcept { return candidates_.size(); }
  const Candidate& candidate(std::size_t i) const { return candidates_[i]; }

  // All candidates with A fixed to index `a`.
  BlockOutput run_block(std::uint32_t a) const {
    BlockOutput out;
    const std::size_t count = candidates_.size();
    const std::size_t shifts = cfg_.n / 2;
    std::vector<int> deficit(shifts);
    std::vector<std::uint32_t> all(count);
    for (std::uint32_t i = 0; i < count; ++i) all[i] = i;
    std::vector<std::uint32_t> scan;
    const Candidate& ca = candidates_[a];
    for (std::uint32_t b = 0; b < count; ++b) {
      const Candidate& cb = candidates_[b];
      for (std::uint32_t c = 0; c < count; ++c) {
        const Candidate& cc = candidates_[c];
        out.examined += count;
        const std::vector<std::uint32_t>* ds = &all;
        if (cfg_.use_rowsum_prefilter) {
          scan.clear();
          const auto it =
              admissible_.find({ca.row_sum, cb.row_sum, cc.row_sum});
          if (it != admissible_.end()) {
            for (int sd : it->second) {
              const auto cell = cells_.find(sd);
              if (cell == cells_.end()) continue;
              scan.insert(scan.end(), cell->second.begin(), cell->second.end());
            }
          }
          out.pruned.rowsum += count - scan.size();
          ds = &scan;
        }
        for (std::size_t k = 0; k < shifts; ++k) {
          deficit[k] = -(ca.paf[k] + cb.paf[k] + cc.paf[k]);
        }
        const std::uint64_t abc_mask =
            ca.negative_mask ^ cb.negative_mask ^ cc.negative_mask;
        for (std::uint32_t d : *ds) {
          const Candidate& cd = candidates_[d];
          if (cfg_.use_product_filter &&
              !product_condition_holds(cfg_.n, abc_mask ^ cd.negative_mask)) {
            ++out.pruned.product;
            continue;
          }
          if (cfg_.use_mod4_filter && !cd.compressed.empty() &&
              !compressed_sum_divisible(ca, cb, cc, cd)) {
            ++out.pruned.mod4;
            continue;
          }
          ++out.paf_tested;
          if (std::equal(deficit.begin(), deficit.end(), cd.paf.begin())) {
            out.hits.push_back({a, b, c, d});
          }
        }
      }
    }
    return out;
  }

 private:
  static bool compressed_sum_divisible(const Candidate& a, const Candidate& b,
                                       const Candidate& c, const Candidate& d) {
    for (std::size_t i = 0; i < a.compressed.size(); ++i) {
      if ((a.compressed[i] + b.compressed[i] + c.compressed[i] +
           d.compressed[i]) %
              4 !=
          0) {
        return false;
      }
    }
    return true;
  }

  SearchConfig cfg_;
  std::vector<Candidate> candidates_;
  std::map<int, std::vector<std::uint32_t>> cells_;
  std::map<std::array<int, 3>, std::vector<int>> admissible_;
};

}  // namespace

SearchResult search(const SearchConfig& cfg) {
  const std::size_t cap = order_cap();
  if (cfg.n < 1 || cfg.n > cap) {
    throw ConfigError("order " + std::to_string(cfg.n) + " outside [1, " +
                      std::to_string(cap) + "]");
  }
  if (cfg.worker_count == 0) {
    throw ConfigError("worker_count must be positive");
  }
  const auto start = std::chrono::steady_clock::now();

  const Searcher searcher(cfg);
  const std::size_t blocks = searcher.size();
  std::vector<BlockOutput> outputs(blocks);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < blocks; i = next.fetch_add(1)) {
      outputs[i] = searcher.run_block(static_cast<std::uint32_t>(i));
    }
  };
  const std::size_t threads = std::min(cfg.worker_count, blocks);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  SearchResult result;
  SearchReport& report = result.report;
  std::vector<WilliamsonQuadruple> raw;
  for (const BlockOutput& out : outputs) {
    report.candidates_examined += out.examined;
    report.paf_tested += out.paf_tested;
    report.pruned.rowsum += out.pruned.rowsum;
    report.pruned.product += out.pruned.product;
    report.pruned.mod4 += out.pruned.mod4;
    for (const Hit& h : out.hits) {
      WilliamsonQuadruple q(searcher.candidate(h.a).seq,
                            searcher.candidate(h.b).seq,
                            searcher.candidate(h.c).seq,
                            searcher.candidate(h.d).seq);
      if (!is_williamson(q)) {
        throw std::logic_error("search produced a non-Williamson quadruple " +
                               q.to_text());
      }
      raw.push_back(std::move(q));
    }
  }
  std::sort(raw.begin(), raw.end());

  std::set<WilliamsonQuadruple> canonical;
  for (const auto& q : raw) canonical.insert(canonicalize(q));

  report.raw_count = raw.size();
  report.canonical_count = canonical.size();
  if (cfg.canonical_only) {
    result.quadruples.assign(canonical.begin(), canonical.end());
  } else {
    result.quadruples = std::move(raw);
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  return result;
}

void write_results(std::ostream& os, const SearchConfig& cfg,
                   const SearchResult& result) {
  for (const auto& q : result.quadruples) os << q.to_text() << '\n';
  const SearchReport& r = result.report;
  auto on_off = [](bool on) { return on ? "on" : "off"; };
  os << "# order " << cfg.n << '\n'
     << "# raw_count " << r.raw_count << '\n'
     << "# canonical_count " << r.canonical_count << '\n'
     << "# listed " << (cfg.canonical_only ? "canonical" : "raw") << '\n'
     << "# candidates_examined " << r.candidates_examined << '\n'
     << "# paf_tested " << r.paf_tested << '\n'
     << "# pruned_rowsum " << r.pruned.rowsum << '\n'
     << "# pruned_product " << r.pruned.product << '\n'
     << "# pruned_mod4 " << r.pruned.mod4 << '\n'
     << "# filters rowsum=" << on_off(cfg.use_rowsum_prefilter)
     << " product=" << on_off(cfg.use_product_filter)
     << " mod4=" << on_off(cfg.use_mod4_filter) << '\n'
     << "# workers " << cfg.worker_count << '\n'
     << "# elapsed_ms " << std::fixed << std::setprecision(3)
     << std::chrono::duration<double, std::milli>(r.elapsed).count() << '\n';
}

}  // namespace wkit
