/*
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef THZFH_DEPLOYMENT_HPP
#define THZFH_DEPLOYMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "thzfh/link_budget.hpp"

namespace thzfh {

enum class NodeKind { central, field, relay };

const char* node_kind_name(NodeKind kind);
NodeKind node_kind_from_name(const std::string& name);  // throws on unknown

struct Node {
    std::string id;
    NodeKind kind = NodeKind::field;
    double x_m = 0.0;
    double y_m = 0.0;
};

struct ThzTransceiver {
    std::string id;
    std::string host_node;
    std::optional<RfParams> rf;  // defaults to the scenario-level template
    double design_cnr_db = 0.0;
    // Anchor distance for the equation-3 bandwidth choice; when unset every
    // chain anchors at its own longest hop.
    std::optional<double> design_distance_m;
};

/// One radio unit's path to the central node plus its transceiver assignment.
struct RuLink {
    std::string ru;
    std::vector<std::string> chain;  // ordered ids, field node first, central last
    std::string transceiver;
    std::optional<double> link_rate_override_bps;  // forces every hop's rate (what-if hook)
};

struct Deployment {
    std::vector<Node> nodes;
    std::vector<ThzTransceiver> transceivers;
    std::vector<RuLink> links;

    const Node* find_node(const std::string& id) const;
    const ThzTransceiver* find_transceiver(const std::string& id) const;
    const RuLink* find_link(const std::string& ru_id) const;

    /// Checks id uniqueness, the single-central-node rule, chain shape
    /// (field ... relays ... central, no repeats) and reference integrity.
    /// Throws std::invalid_argument naming the offending id.
    void validate() const;
};

double node_distance_m(const Node& a, const Node& b);

}  // namespace thzfh

#endif
