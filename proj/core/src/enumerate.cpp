#include "topolab/enumerate.hpp"

#include <array>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "topolab/errors.hpp"

namespace topolab {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::ClosureBrute: return "closure";
    case Strategy::PreorderBacktrack: return "preorder";
    case Strategy::Both: return "both";
  }
  return "unknown";
}

Strategy parse_strategy(std::string_view name) {
  if (name == "closure" || name == "closure-brute") return Strategy::ClosureBrute;
  if (name == "preorder" || name == "preorder-backtrack") return Strategy::PreorderBacktrack;
  if (name == "both") return Strategy::Both;
  throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
}

namespace {

// A preorder on {x_0..x_{k-1}} together with its up-closed sets.
struct PreorderNode {
  int k = 0;
  std::array<SetMask, kMaxPreorderSize> up{};
  std::vector<SetMask> opens{SetMask{}};
};

// Depth-first extension by one element at a time. The new element x_k is
// placed by choosing D = {d : d <= x_k} (a down-set, i.e. the complement of
// an open) and U = {u : x_k <= u} (an open). Transitivity through x_k forces
// d <= u for all d in D, u in U, which prunes U to opens inside the common
// up-set of D. Each preorder on k+1 points arises from exactly one (D, U).
template <class Leaf>
void extend(const PreorderNode& node, int depth, Leaf&& leaf) {
  if (node.k == depth) {
    leaf(node);
    return;
  }
  const int k = node.k;
  const SetMask full = SetMask::full(k);
  const SetMask new_bit = SetMask::singleton(k);
  PreorderNode child;
  child.k = k + 1;
  for (SetMask open : node.opens) {
    const SetMask below = open.complement(k);
    SetMask common = full;
    for (int d = 0; d < k; ++d) {
      if (below.contains(d)) common = common & node.up[static_cast<std::size_t>(d)];
    }
    for (SetMask above : node.opens) {
      if (!above.subset_of(common)) continue;
      child.up = node.up;
      for (int d = 0; d < k; ++d) {
        if (below.contains(d)) {
          child.up[static_cast<std::size_t>(d)] = child.up[static_cast<std::size_t>(d)] | new_bit;
        }
      }
      child.up[static_cast<std::size_t>(k)] = above | new_bit;
      child.opens.clear();
      for (SetMask v : node.opens) {
        if ((v & below).empty()) child.opens.push_back(v);
      }
      for (SetMask v : node.opens) {
        if (above.subset_of(v)) child.opens.push_back(v | new_bit);
      }
      extend(child, depth, leaf);
    }
  }
  (void)full;
}

class Emitter {
 public:
  Emitter(const EnumConfig& cfg, const TopologyVisitor& visitor)
      : cfg_(cfg), visitor_(visitor) {}

  // Filters that do not depend on emission order; safe on worker threads.
  bool accept(const Topology& t) const {
    if (cfg_.min_card && t.size() < *cfg_.min_card) return false;
    if (cfg_.require_t0 && !is_t0(t)) return false;
    if (cfg_.up_to_iso && !use_seen_set() && !is_canonical(t)) return false;
    return true;
  }

  void emit(const Topology& t) {
    if (cfg_.up_to_iso) {
      if (use_seen_set()) {
        Topology canon = canonical_form(t);
        if (!seen_.insert(canon).second) return;
        record(canon);
        return;
      }
    }
    record(t);
  }

  EnumStats& stats() { return stats_; }

 private:
  bool use_seen_set() const { return cfg_.n <= 5; }

  void record(const Topology& t) {
    ++stats_.total;
    ++stats_.by_cardinality[t.size()];
    visitor_(t);
  }

  const EnumConfig& cfg_;
  const TopologyVisitor& visitor_;
  std::set<Topology> seen_;
  EnumStats stats_;
};

Topology leaf_topology(const PreorderNode& node) {
  return Topology::from_closed_family(node.k, node.opens);
}

std::vector<PreorderNode> split_points(int n) {
  const int depth = std::min(n, 4);
  std::vector<PreorderNode> items;
  extend(PreorderNode{}, depth, [&](const PreorderNode& node) { items.push_back(node); });
  return items;
}

void run_preorder_sequential(int n, Emitter& emitter) {
  extend(PreorderNode{}, n, [&](const PreorderNode& node) {
    Topology t = leaf_topology(node);
    if (emitter.accept(t)) emitter.emit(t);
  });
}

// Workers expand subtrees out of order; the calling thread replays finished
// subtrees strictly in index order, so the visitor sees the sequential order.
void run_preorder_parallel(int n, unsigned threads, Emitter& emitter) {
  const auto items = split_points(n);
  const std::size_t window = std::size_t{4} * threads;

  std::mutex mu;
  std::condition_variable cv;
  std::vector<std::vector<Topology>> chunks(items.size());
  std::vector<bool> ready(items.size(), false);
  std::size_t next_item = 0;
  std::size_t next_emit = 0;
  bool stop = false;
  std::exception_ptr failure;

  auto work = [&] {
    while (true) {
      std::size_t i;
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] {
          return stop || next_item >= items.size() || next_item < next_emit + window;
        });
        if (stop || next_item >= items.size()) return;
        i = next_item++;
      }
      std::vector<Topology> chunk;
      try {
        extend(items[i], n, [&](const PreorderNode& node) {
          Topology t = leaf_topology(node);
          if (emitter.accept(t)) chunk.push_back(std::move(t));
        });
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        stop = true;
        cv.notify_all();
        return;
      }
      std::lock_guard lock(mu);
      chunks[i] = std::move(chunk);
      ready[i] = true;
      cv.notify_all();
    }
  };

  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work);

  auto shutdown = [&] {
    {
      std::lock_guard lock(mu);
      stop = true;
    }
    cv.notify_all();
    pool.clear();
  };

  try {
    for (std::size_t i = 0; i < items.size(); ++i) {
      std::vector<Topology> chunk;
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return ready[i] || failure != nullptr; });
        if (failure) break;
        chunk = std::move(chunks[i]);
        next_emit = i + 1;
      }
      cv.notify_all();
      for (const Topology& t : chunk) emitter.emit(t);
    }
  } catch (...) {
    shutdown();
    throw;
  }
  shutdown();
  if (failure) std::rethrow_exception(failure);
}

template <class Visit>
void closure_brute(int n, Visit&& visit) {
  const std::uint32_t full = (1u << n) - 1u;
  std::vector<SetMask> proper;
  for (std::uint32_t b = 1; b < full; ++b) proper.emplace_back(b);
  const std::uint64_t families = std::uint64_t{1} << proper.size();
  std::vector<SetMask> family;
  for (std::uint64_t f = 0; f < families; ++f) {
    family.assign({SetMask{}, SetMask(full)});
    std::uint32_t member = 1u | (1u << full);  // membership of masks 0..15
    for (std::size_t i = 0; i < proper.size(); ++i) {
      if ((f >> i) & 1u) {
        family.push_back(proper[i]);
        member |= 1u << proper[i].bits();
      }
    }
    bool closed = true;
    for (std::size_t i = 0; i < family.size() && closed; ++i) {
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        if (!((member >> (family[i] | family[j]).bits()) & 1u) ||
            !((member >> (family[i] & family[j]).bits()) & 1u)) {
          closed = false;
          break;
        }
      }
    }
    if (closed) visit(Topology::from_closed_family(n, family));
  }
}

void check_config(const EnumConfig& cfg) {
  if (cfg.n < 1) throw GroundSizeOutOfRange("ground size must be >= 1");
  const int limit = cfg.strategy == Strategy::PreorderBacktrack ? kMaxPreorderSize
                                                                : kMaxClosureBruteSize;
  if (cfg.n > limit) {
    throw StrategyOutOfRange("strategy '" + std::string(to_string(cfg.strategy)) +
                             "' supports n <= " + std::to_string(limit));
  }
}

}  // namespace

EnumStats enumerate_topologies(const EnumConfig& cfg, const TopologyVisitor& visitor) {
  check_config(cfg);
  const auto start = std::chrono::steady_clock::now();
  Emitter emitter(cfg, visitor);
  const unsigned threads = std::max(1u, cfg.thread_count);

  switch (cfg.strategy) {
    case Strategy::PreorderBacktrack:
      if (threads == 1 || cfg.n <= 4) {
        run_preorder_sequential(cfg.n, emitter);
      } else {
        run_preorder_parallel(cfg.n, threads, emitter);
      }
      break;
    case Strategy::ClosureBrute:
      closure_brute(cfg.n, [&](const Topology& t) {
        if (emitter.accept(t)) emitter.emit(t);
      });
      break;
    case Strategy::Both: {
      std::vector<Topology> from_preorder;
      extend(PreorderNode{}, cfg.n, [&](const PreorderNode& node) {
        Topology t = leaf_topology(node);
        if (emitter.accept(t)) from_preorder.push_back(std::move(t));
      });
      std::set<Topology> from_closure;
      closure_brute(cfg.n, [&](const Topology& t) {
        if (emitter.accept(t)) from_closure.insert(t);
      });
      const std::set<Topology> preorder_set(from_preorder.begin(), from_preorder.end());
      if (preorder_set != from_closure || preorder_set.size() != from_preorder.size()) {
        throw StrategyMismatch("closure-brute found " + std::to_string(from_closure.size()) +
                               " topologies, preorder-backtrack " +
                               std::to_string(from_preorder.size()));
      }
      for (const Topology& t : from_preorder) emitter.emit(t);
      break;
    }
  }

  EnumStats stats = std::move(emitter.stats());
  stats.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  return stats;
}

std::uint64_t count_topologies(int n, std::optional<std::size_t> min_card, bool require_t0) {
  EnumConfig cfg;
  cfg.n = n;
  cfg.min_card = min_card;
  cfg.require_t0 = require_t0;
  return enumerate_topologies(cfg, [](const Topology&) {}).total;
}

}  // namespace topolab
