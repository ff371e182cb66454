/*
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef THZFH_EVENT_QUEUE_HPP
#define THZFH_EVENT_QUEUE_HPP

#include <cstdint>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace thzfh {

/// Min-time-first event queue over integer picosecond ticks. Ties pop in
/// insertion order (strictly increasing sequence numbers), which is what
/// makes a whole simulation run reproducible event by event.
template <typename T>
class EventQueue {
public:
    void schedule(int64_t time_ps, T payload) {
        if (time_ps < clock_ps_) {
            throw std::invalid_argument("cannot schedule an event into the past");
        }
        heap_.push(Entry{time_ps, next_seq_++, std::move(payload)});
    }

    std::pair<int64_t, T> pop_next() {
        if (heap_.empty()) {
            throw std::out_of_range("event queue is empty");
        }
        Entry top = heap_.top();
        heap_.pop();
        clock_ps_ = top.time_ps;
        return {top.time_ps, std::move(top.payload)};
    }

    bool empty() const { return heap_.empty(); }
    std::size_t size() const { return heap_.size(); }
    int64_t next_time_ps() const {
        if (heap_.empty()) throw std::out_of_range("event queue is empty");
        return heap_.top().time_ps;
    }
    int64_t clock_ps() const { return clock_ps_; }

private:
    struct Entry {
        int64_t time_ps;
        uint64_t seq;
        T payload;
    };
    struct Later {
        bool operator()(const Entry& a, const Entry& b) const {
            if (a.time_ps != b.time_ps) return a.time_ps > b.time_ps;
            return a.seq > b.seq;
        }
    };

    std::priority_queue<Entry, std::vector<Entry>, Later> heap_;
    uint64_t next_seq_ = 0;
    int64_t clock_ps_ = 0;
};

}  // namespace thzfh

#endif
