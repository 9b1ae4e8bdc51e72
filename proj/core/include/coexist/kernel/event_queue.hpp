#ifndef COEXIST_KERNEL_EVENT_QUEUE_HPP
#define COEXIST_KERNEL_EVENT_QUEUE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <unordered_map>
#include <utility>

#include "coexist/kernel/errors.hpp"
#include "coexist/kernel/sim_time.hpp"

namespace coexist {

using EventFn = std::function<void()>;

struct EventHandle {
  std::uint64_t id = 0;
  bool valid() const { return id != 0; }
};

/// Deterministic single-run event engine. Events fire in (fire_at, seq)
/// order, where seq is the insertion counter, so ties resolve by scheduling
/// order and traces are reproducible.
class Simulator {
 public:
  SimTime now() const { return now_; }

  /// kind must be a string literal (stored by pointer, hashed by content for
  /// the event trace); target identifies the node for trace purposes.
  EventHandle schedule(SimTime at, const char* kind, int target, EventFn fn) {
    COEXIST_CHECK_MSG(at >= now_, "scheduling in the past: " << kind);
    const std::uint64_t seq = ++next_seq_;
    Key key{at, seq};
    queue_.emplace(key, Entry{kind, target, std::move(fn)});
    index_.emplace(seq, key);
    return EventHandle{seq};
  }

  /// True iff the event existed and had not fired; idempotent.
  bool cancel(EventHandle h) {
    auto it = index_.find(h.id);
    if (it == index_.end()) return false;
    queue_.erase(it->second);
    index_.erase(it);
    return true;
  }

  /// Delivers every event with fire_at <= end, then sets the clock to end.
  /// Returns the number of delivered events.
  std::uint64_t run_until(SimTime end) {
    COEXIST_CHECK(end >= now_);
    std::uint64_t delivered = 0;
    while (!queue_.empty()) {
      auto it = queue_.begin();
      if (it->first.at > end) break;
      now_ = it->first.at;
      Entry e = std::move(it->second);
      index_.erase(it->first.seq);
      queue_.erase(it);
      if (trace_enabled_) trace_event(now_, e.kind, e.target);
      ++delivered;
      ++delivered_total_;
      e.fn();
    }
    now_ = end;
    return delivered;
  }

  std::size_t pending() const { return queue_.size(); }
  std::uint64_t delivered_total() const { return delivered_total_; }

  void set_trace(bool on) { trace_enabled_ = on; }
  std::uint64_t trace_hash() const { return trace_hash_; }

 private:
  struct Key {
    SimTime at;
    std::uint64_t seq;
    bool operator<(const Key& o) const {
      if (at != o.at) return at < o.at;
      return seq < o.seq;
    }
  };
  struct Entry {
    const char* kind;
    int target;
    EventFn fn;
  };

  void trace_event(SimTime t, const char* kind, int target) {
    auto mix = [this](std::uint64_t v) {
      trace_hash_ ^= v + 0x9e3779b97f4a7c15ull + (trace_hash_ << 6) +
                     (trace_hash_ >> 2);
    };
    mix(static_cast<std::uint64_t>(t.ns()));
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const char* p = kind; *p; ++p) {
      h ^= static_cast<unsigned char>(*p);
      h *= 0x100000001b3ull;
    }
    mix(h);
    mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(target)));
  }

  SimTime now_{};
  std::uint64_t next_seq_ = 0;
  std::uint64_t delivered_total_ = 0;
  std::map<Key, Entry> queue_;
  std::unordered_map<std::uint64_t, Key> index_;
  bool trace_enabled_ = false;
  std::uint64_t trace_hash_ = 0;
};

}  // namespace coexist

#endif  // COEXIST_KERNEL_EVENT_QUEUE_HPP
