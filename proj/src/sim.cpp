/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include "thzfh/sim.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>

#include "thzfh/event_queue.hpp"
#include "thzfh/units.hpp"

namespace thzfh {

namespace {

int64_t to_ps(double seconds) { return std::llround(seconds * 1e12); }
double to_s(int64_t ps) { return static_cast<double>(ps) / 1e12; }

struct RateSegment {
    int64_t start_ps;
    double rate_bps;
};

struct SimLink {
    std::string key;  // "from->to"
    int64_t prop_ps = 0;
    std::vector<RateSegment> timeline;  // sorted by start; last segment extends forever
    // provenance, to reject conflicting chains over one physical hop
    std::string transceiver;
    int profile_index = -1;
    double override_bps = -1.0;

    std::deque<uint64_t> queue;
    bool transmitting = false;
    bool poll_pending = false;
    int64_t busy_ps = 0;
    uint64_t max_queue_depth = 0;

    double rate_at(int64_t t_ps) const {
        const RateSegment* active = &timeline.front();
        for (const auto& seg : timeline) {
            if (seg.start_ps <= t_ps) active = &seg;
            else break;
        }
        return active->rate_bps;
    }
    int64_t next_up_after(int64_t t_ps) const {  // next boundary with rate > 0, or -1
        for (const auto& seg : timeline) {
            if (seg.start_ps > t_ps && seg.rate_bps > 0.0) return seg.start_ps;
        }
        return -1;
    }
};

struct SimFlow {
    std::string ru;
    FlowDirection direction;
    std::vector<uint32_t> links;  // hop link ids in travel order
    double size_bits = 0.0;
    int64_t period_ps = 0;
};

struct FrameState {
    uint32_t flow;
    int64_t gen_ps;
    int64_t min_end_ps = 0;  // cut-through: the tail cannot pass the previous hop
};

struct Ev {
    enum Kind : uint8_t { generate, arrival, completion, poll, delivered };
    Kind kind;
    uint32_t index;  // flow (generate), hop index (arrival/completion), link id (poll)
    uint64_t frame = 0;
};

// nearest-rank percentile over sorted ascending latencies
double percentile_s(const std::vector<int64_t>& sorted, double q) {
    if (sorted.empty()) return 0.0;
    size_t rank = static_cast<size_t>(std::ceil(q * static_cast<double>(sorted.size())));
    rank = std::clamp<size_t>(rank, 1, sorted.size());
    return to_s(sorted[rank - 1]);
}

struct Interval {
    int64_t begin;
    int64_t end;
};

std::vector<Interval> merge_intervals(std::vector<Interval> in) {
    std::sort(in.begin(), in.end(),
              [](const Interval& a, const Interval& b) { return a.begin < b.begin; });
    std::vector<Interval> out;
    for (const auto& iv : in) {
        if (!out.empty() && iv.begin <= out.back().end) {
            out.back().end = std::max(out.back().end, iv.end);
        } else {
            out.push_back(iv);
        }
    }
    return out;
}

class Engine {
public:
    Engine(const Deployment& deployment, const FronthaulParams& fronthaul,
           const RfParams& default_rf, const SpectralEfficiencyModel& se_model,
           const std::vector<WeatherProfile>& weather, BandwidthMode bandwidth_mode,
           const SimConfig& config, bool record_trace)
        : se_model_(se_model),
          weather_(weather),
          bandwidth_mode_(bandwidth_mode),
          config_(config),
          record_trace_(record_trace) {
        duration_ps_ = to_ps(config.duration_s);
        budget_ps_ = to_ps(config.latency_budget_s);
        proc_ps_ = to_ps(config.per_hop_processing_s);

        const FrameModel dl = frame_model(fronthaul);
        const int ul_bits = config.ul_quant_bits > 0 ? config.ul_quant_bits
                                                     : fronthaul.quant_bits_per_sample;
        const double ul_payload = dl.per_symbol_payload_bits * static_cast<double>(ul_bits) /
                                  fronthaul.quant_bits_per_sample;
        period_ps_ = to_ps(dl.symbol_period_s);
        if (period_ps_ <= 0) {
            throw std::invalid_argument("symbol period below the picosecond tick resolution");
        }

        for (const auto& rl : deployment.links) {
            const int profile_idx = profile_for(rl.ru);
            const auto hops = chain_states(deployment, rl, default_rf, se_model);
            std::vector<uint32_t> up_ids, down_ids;
            for (const auto& h : hops) up_ids.push_back(add_link(h, false, rl, profile_idx));
            for (auto it = hops.rbegin(); it != hops.rend(); ++it) {
                down_ids.push_back(add_link(*it, true, rl, profile_idx));
            }
            ru_uplink_links_.emplace_back(rl.ru, up_ids);

            const double ul_size = ul_payload * config.load_factor * config.uplink_fraction;
            const double dl_size = dl.per_symbol_payload_bits * config.load_factor *
                                   (1.0 - config.uplink_fraction);
            if (ul_size > 0.0) {
                flows_.push_back({rl.ru, FlowDirection::uplink, up_ids, ul_size, period_ps_});
            }
            if (dl_size > 0.0) {
                flows_.push_back({rl.ru, FlowDirection::downlink, down_ids, dl_size, period_ps_});
            }
        }

        emitted_.assign(flows_.size(), 0);
        generated_.assign(flows_.size(), 0);
        delivered_.assign(flows_.size(), 0);
        violations_.assign(flows_.size(), 0);
        latencies_.assign(flows_.size(), std::vector<int64_t>());
        for (size_t i = 0; i < flows_.size(); ++i) {
            rngs_.emplace_back(config.seed * 0x9E3779B97F4A7C15ULL + i + 1);
        }
    }

    SimResult execute() {
        for (uint32_t f = 0; f < flows_.size(); ++f) {
            const int64_t t0 = jitter_ps(f);
            if (t0 < duration_ps_) queue_.schedule(t0, Ev{Ev::generate, f, 0});
        }
        while (!queue_.empty() && queue_.next_time_ps() <= duration_ps_) {
            auto [now, ev] = queue_.pop_next();
            switch (ev.kind) {
                case Ev::generate: on_generate(ev.index, now); break;
                case Ev::arrival: on_arrival(ev.frame, ev.index, now); break;
                case Ev::completion: on_completion(ev.frame, ev.index, now); break;
                case Ev::poll:
                    links_[ev.index].poll_pending = false;
                    service(ev.index, now);
                    break;
                case Ev::delivered: on_delivered(ev.frame, now); break;
            }
        }
        return assemble();
    }

private:
    int profile_for(const std::string& ru) const {
        int match = -1;
        for (size_t i = 0; i < weather_.size(); ++i) {
            const auto& p = weather_[i];
            const bool applies = p.applies_to.empty() ||
                                 std::find(p.applies_to.begin(), p.applies_to.end(), ru) !=
                                     p.applies_to.end();
            if (!applies) continue;
            if (match >= 0) {
                throw std::invalid_argument("RU " + ru +
                                            " matched by more than one weather profile");
            }
            match = static_cast<int>(i);
        }
        if (match >= 0 && weather_[match].horizon_s < config_.duration_s) {
            throw std::invalid_argument(
                "weather profile horizon is shorter than the simulation for RU " + ru);
        }
        return match;
    }

    uint32_t add_link(const HopState& hop, bool reverse, const RuLink& owner, int profile_idx) {
        const std::string key = reverse ? hop.to + "->" + hop.from : hop.from + "->" + hop.to;
        auto it = link_index_.find(key);
        if (it != link_index_.end()) {
            const SimLink& existing = links_[it->second];
            const double ov = owner.link_rate_override_bps.value_or(-1.0);
            if (existing.transceiver != owner.transceiver ||
                existing.profile_index != profile_idx || existing.override_bps != ov) {
                throw std::invalid_argument("hop " + key +
                                            " is shared by chains with conflicting transceiver, "
                                            "weather profile or rate override");
            }
            return it->second;
        }
        SimLink l;
        l.key = key;
        l.prop_ps = to_ps(hop.distance_m / kSpeedOfLight);
        l.transceiver = owner.transceiver;
        l.profile_index = profile_idx;
        l.override_bps = owner.link_rate_override_bps.value_or(-1.0);
        if (owner.link_rate_override_bps) {
            l.timeline.push_back({0, *owner.link_rate_override_bps});
        } else if (profile_idx < 0) {
            l.timeline.push_back({0, hop.rate_bps});
        } else {
            for (const auto& st : hop_timeline(weather_[profile_idx], hop, se_model_,
                                               bandwidth_mode_)) {
                l.timeline.push_back({to_ps(st.start_s), st.rate_bps});
            }
        }
        links_.push_back(std::move(l));
        link_index_.emplace(key, static_cast<uint32_t>(links_.size() - 1));
        return static_cast<uint32_t>(links_.size() - 1);
    }

    int64_t jitter_ps(uint32_t flow) {
        if (config_.gen_jitter_fraction == 0.0) return 0;
        std::uniform_real_distribution<double> u(0.0, config_.gen_jitter_fraction);
        return std::llround(u(rngs_[flow]) * static_cast<double>(flows_[flow].period_ps));
    }

    void on_generate(uint32_t flow_idx, int64_t now) {
        SimFlow& flow = flows_[flow_idx];
        const uint64_t frame_id = frames_.size();
        frames_.push_back({flow_idx, now, 0});
        ++generated_[flow_idx];
        if (record_trace_) {
            records_.push_back({frame_id, flow.ru, flow.direction, now, flow.size_bits, -1, {},
                                false});
        }

        const uint64_t next_index = ++emitted_[flow_idx];
        const int64_t next_t =
            static_cast<int64_t>(next_index) * flow.period_ps + jitter_ps(flow_idx);
        if (next_t < duration_ps_) {
            queue_.schedule(next_t, Ev{Ev::generate, flow_idx, 0});
        }
        on_arrival(frame_id, 0, now);
    }

    void on_arrival(uint64_t frame_id, uint32_t hop_idx, int64_t now) {
        const SimFlow& flow = flows_[frames_[frame_id].flow];
        const uint32_t link_id = flow.links[hop_idx];
        SimLink& link = links_[link_id];
        link.queue.push_back(frame_id);
        service(link_id, now);
        link.max_queue_depth = std::max<uint64_t>(link.max_queue_depth, link.queue.size());
    }

    void service(uint32_t link_id, int64_t now) {
        SimLink& link = links_[link_id];
        if (link.transmitting || link.queue.empty()) return;

        const double rate = link.rate_at(now);
        if (rate <= 0.0) {
            const int64_t up = link.next_up_after(now);
            if (up >= 0 && !link.poll_pending) {
                link.poll_pending = true;
                queue_.schedule(up, Ev{Ev::poll, link_id, 0});
            }
            return;  // outage: frames stay queued
        }

        const uint64_t frame_id = link.queue.front();
        link.queue.pop_front();
        FrameState& frame = frames_[frame_id];
        const SimFlow& flow = flows_[frame.flow];

        uint32_t hop_idx = 0;
        for (uint32_t i = 0; i < flow.links.size(); ++i) {
            if (flow.links[i] == link_id) { hop_idx = i; break; }
        }

        // the in-flight frame keeps its start-time rate across segment changes
        const int64_t ser_ps = std::llround(flow.size_bits / rate * 1e12);
        const int64_t end_ps = std::max(now + ser_ps, frame.min_end_ps);
        link.transmitting = true;
        link.busy_ps += std::max<int64_t>(0, std::min(end_ps, duration_ps_) - now);
        queue_.schedule(end_ps, Ev{Ev::completion, hop_idx, frame_id});

        if (config_.forwarding == Forwarding::cut_through && hop_idx + 1 < flow.links.size()) {
            frame.min_end_ps = end_ps + link.prop_ps + proc_ps_;
            queue_.schedule(now + link.prop_ps + proc_ps_,
                            Ev{Ev::arrival, hop_idx + 1, frame_id});
        }
    }

    void on_completion(uint64_t frame_id, uint32_t hop_idx, int64_t now) {
        const SimFlow& flow = flows_[frames_[frame_id].flow];
        const uint32_t link_id = flow.links[hop_idx];
        SimLink& link = links_[link_id];
        link.transmitting = false;

        if (record_trace_) records_[frame_id].hop_departure_ps.push_back(now);

        const bool last_hop = hop_idx + 1 == flow.links.size();
        const int64_t handoff = now + link.prop_ps + proc_ps_;
        if (last_hop) {
            queue_.schedule(handoff, Ev{Ev::delivered, 0, frame_id});
        } else if (config_.forwarding == Forwarding::store_and_forward) {
            queue_.schedule(handoff, Ev{Ev::arrival, hop_idx + 1, frame_id});
        }
        service(link_id, now);
    }

    void on_delivered(uint64_t frame_id, int64_t now) {
        const FrameState& frame = frames_[frame_id];
        const int64_t latency = now - frame.gen_ps;
        ++delivered_[frame.flow];
        latencies_[frame.flow].push_back(latency);
        const bool met = latency <= budget_ps_;
        if (!met) ++violations_[frame.flow];
        if (record_trace_) {
            records_[frame_id].delivery_time_ps = now;
            records_[frame_id].budget_met = met;
        }
    }

    // total time in [0, duration) where the worst hop of the set is down
    std::vector<Interval> outage_intervals(const std::vector<uint32_t>& link_ids) const {
        std::vector<int64_t> bounds{0, duration_ps_};
        for (uint32_t id : link_ids) {
            for (const auto& seg : links_[id].timeline) {
                if (seg.start_ps > 0 && seg.start_ps < duration_ps_) {
                    bounds.push_back(seg.start_ps);
                }
            }
        }
        std::sort(bounds.begin(), bounds.end());
        bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());

        std::vector<Interval> out;
        for (size_t i = 0; i + 1 < bounds.size(); ++i) {
            bool down = false;
            for (uint32_t id : link_ids) {
                if (links_[id].rate_at(bounds[i]) <= 0.0) { down = true; break; }
            }
            if (down) out.push_back({bounds[i], bounds[i + 1]});
        }
        return merge_intervals(std::move(out));
    }

    static LatencyStats stats_from(std::vector<int64_t> latencies, uint64_t generated,
                                   uint64_t delivered, uint64_t violations) {
        LatencyStats s;
        s.frames_generated = generated;
        s.frames_delivered = delivered;
        s.frames_in_flight = generated - delivered;
        if (!latencies.empty()) {
            std::sort(latencies.begin(), latencies.end());
            long double sum = 0;
            for (int64_t l : latencies) sum += static_cast<long double>(l);
            s.latency_mean_s = static_cast<double>(sum / latencies.size() / 1e12L);
            s.latency_p50_s = percentile_s(latencies, 0.50);
            s.latency_p95_s = percentile_s(latencies, 0.95);
            s.latency_p99_s = percentile_s(latencies, 0.99);
            s.latency_max_s = to_s(latencies.back());
            s.budget_violation_fraction =
                static_cast<double>(violations) / static_cast<double>(latencies.size());
        }
        return s;
    }

    SimResult assemble() {
        SimResult result;
        result.metrics.duration_s = config_.duration_s;

        std::vector<int64_t> all_latencies;
        uint64_t all_gen = 0, all_del = 0, all_vio = 0;
        std::vector<Interval> all_outage;

        for (const auto& [ru, up_ids] : ru_uplink_links_) {
            std::vector<int64_t> ru_lat;
            uint64_t gen = 0, del = 0, vio = 0;
            for (size_t f = 0; f < flows_.size(); ++f) {
                if (flows_[f].ru != ru) continue;
                ru_lat.insert(ru_lat.end(), latencies_[f].begin(), latencies_[f].end());
                gen += generated_[f];
                del += delivered_[f];
                vio += violations_[f];
            }
            all_latencies.insert(all_latencies.end(), ru_lat.begin(), ru_lat.end());
            all_gen += gen;
            all_del += del;
            all_vio += vio;

            LatencyStats s = stats_from(std::move(ru_lat), gen, del, vio);
            const auto outage = outage_intervals(up_ids);
            int64_t outage_ps = 0;
            for (const auto& iv : outage) outage_ps += iv.end - iv.begin;
            s.outage_s = to_s(outage_ps);
            all_outage.insert(all_outage.end(), outage.begin(), outage.end());
            result.metrics.per_ru.emplace_back(ru, s);
        }

        LatencyStats agg = stats_from(std::move(all_latencies), all_gen, all_del, all_vio);
        int64_t agg_outage_ps = 0;
        for (const auto& iv : merge_intervals(std::move(all_outage))) {
            agg_outage_ps += iv.end - iv.begin;
        }
        agg.outage_s = to_s(agg_outage_ps);
        result.metrics.aggregate = agg;

        for (const auto& link : links_) {
            LinkStats ls;
            ls.key = link.key;
            ls.utilization = static_cast<double>(link.busy_ps) / static_cast<double>(duration_ps_);
            ls.max_queue_depth = link.max_queue_depth;
            result.metrics.max_queue_depth =
                std::max(result.metrics.max_queue_depth, link.max_queue_depth);
            result.metrics.per_link.push_back(std::move(ls));
        }
        if (record_trace_) result.trace = std::move(records_);
        return result;
    }

    const SpectralEfficiencyModel& se_model_;
    const std::vector<WeatherProfile>& weather_;
    BandwidthMode bandwidth_mode_;
    const SimConfig& config_;
    bool record_trace_;

    int64_t duration_ps_ = 0;
    int64_t budget_ps_ = 0;
    int64_t proc_ps_ = 0;
    int64_t period_ps_ = 0;

    std::vector<SimLink> links_;
    std::map<std::string, uint32_t> link_index_;
    std::vector<SimFlow> flows_;
    std::vector<std::pair<std::string, std::vector<uint32_t>>> ru_uplink_links_;

    std::vector<FrameState> frames_;
    std::vector<FrameRecord> records_;
    std::vector<uint64_t> emitted_;
    std::vector<uint64_t> generated_, delivered_, violations_;
    std::vector<std::vector<int64_t>> latencies_;
    std::vector<std::mt19937_64> rngs_;
    EventQueue<Ev> queue_;
};

}  // namespace

void SimConfig::validate() const {
    check_positive(duration_s, "duration_s");
    check_positive(load_factor, "load_factor");
    check_positive(latency_budget_s, "latency_budget_s");
    check_non_negative(per_hop_processing_s, "per_hop_processing_s");
    if (!(uplink_fraction >= 0.0 && uplink_fraction <= 1.0)) {
        throw std::invalid_argument("uplink_fraction must be in [0, 1]");
    }
    if (!(gen_jitter_fraction >= 0.0 && gen_jitter_fraction < 1.0)) {
        throw std::invalid_argument("gen_jitter_fraction must be in [0, 1)");
    }
    if (ul_quant_bits != 0 && (ul_quant_bits < 0 || ul_quant_bits % 2 != 0)) {
        throw std::invalid_argument("ul_quant_bits must be a positive even integer");
    }
}

double closed_form_oracle_s(double distance_m, double link_rate_bps, double frame_bits,
                            double per_hop_processing_s) {
    check_positive(link_rate_bps, "link_rate_bps");
    check_positive(frame_bits, "frame_bits");
    check_non_negative(distance_m, "distance_m");
    check_non_negative(per_hop_processing_s, "per_hop_processing_s");
    return frame_bits / link_rate_bps + distance_m / kSpeedOfLight + per_hop_processing_s;
}

SimResult run(const Deployment& deployment, const FronthaulParams& fronthaul,
              const RfParams& default_rf, const SpectralEfficiencyModel& se_model,
              const std::vector<WeatherProfile>& weather, BandwidthMode bandwidth_mode,
              const SimConfig& config, bool record_trace) {
    deployment.validate();
    fronthaul.validate();
    config.validate();
    for (const auto& p : weather) p.validate();

    Engine engine(deployment, fronthaul, default_rf, se_model, weather, bandwidth_mode, config,
                  record_trace);
    return engine.execute();
}

}  // namespace thzfh
