/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include "thzfh/deployment.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "thzfh/units.hpp"

namespace thzfh {

const char* node_kind_name(NodeKind kind) {
    switch (kind) {
        case NodeKind::central: return "central";
        case NodeKind::field: return "field";
        case NodeKind::relay: return "relay";
    }
    throw std::logic_error("unreachable");
}

NodeKind node_kind_from_name(const std::string& name) {
    if (name == "central") return NodeKind::central;
    if (name == "field") return NodeKind::field;
    if (name == "relay") return NodeKind::relay;
    throw std::invalid_argument("unknown node kind: " + name);
}

const Node* Deployment::find_node(const std::string& id) const {
    for (const auto& n : nodes) {
        if (n.id == id) return &n;
    }
    return nullptr;
}

const ThzTransceiver* Deployment::find_transceiver(const std::string& id) const {
    for (const auto& t : transceivers) {
        if (t.id == id) return &t;
    }
    return nullptr;
}

const RuLink* Deployment::find_link(const std::string& ru_id) const {
    for (const auto& l : links) {
        if (l.ru == ru_id) return &l;
    }
    return nullptr;
}

double node_distance_m(const Node& a, const Node& b) {
    return std::hypot(a.x_m - b.x_m, a.y_m - b.y_m);
}

void Deployment::validate() const {
    std::unordered_set<std::string> node_ids;
    int centrals = 0;
    for (const auto& n : nodes) {
        if (n.id.empty()) throw std::invalid_argument("node with empty id");
        if (!node_ids.insert(n.id).second) {
            throw std::invalid_argument("duplicate node id: " + n.id);
        }
        if (!std::isfinite(n.x_m) || !std::isfinite(n.y_m)) {
            throw std::invalid_argument("node position must be finite: " + n.id);
        }
        if (n.kind == NodeKind::central) ++centrals;
    }
    if (centrals != 1) {
        throw std::invalid_argument("deployment must contain exactly one central node, found " +
                                    std::to_string(centrals));
    }

    std::unordered_set<std::string> tr_ids;
    for (const auto& t : transceivers) {
        if (t.id.empty()) throw std::invalid_argument("transceiver with empty id");
        if (!tr_ids.insert(t.id).second) {
            throw std::invalid_argument("duplicate transceiver id: " + t.id);
        }
        if (!find_node(t.host_node)) {
            throw std::invalid_argument("transceiver " + t.id + " references unknown host node " +
                                        t.host_node);
        }
        if (t.rf) t.rf->validate();
        check_positive(t.design_cnr_db, ("transceiver " + t.id + " design_cnr_db").c_str());
        if (t.design_distance_m) {
            check_positive(*t.design_distance_m,
                           ("transceiver " + t.id + " design_distance_m").c_str());
        }
    }

    std::unordered_set<std::string> linked_rus;
    for (const auto& l : links) {
        const Node* ru = find_node(l.ru);
        if (!ru) throw std::invalid_argument("link references unknown node " + l.ru);
        if (ru->kind != NodeKind::field) {
            throw std::invalid_argument("link endpoint " + l.ru + " is not a field node");
        }
        if (!linked_rus.insert(l.ru).second) {
            throw std::invalid_argument("node " + l.ru + " has more than one chain");
        }
        if (!find_transceiver(l.transceiver)) {
            throw std::invalid_argument("link for " + l.ru + " references unknown transceiver " +
                                        l.transceiver);
        }
        if (l.chain.size() < 2) {
            throw std::invalid_argument("chain for " + l.ru + " must list at least two nodes");
        }
        if (l.chain.front() != l.ru) {
            throw std::invalid_argument("chain for " + l.ru + " must start at that node");
        }
        std::unordered_set<std::string> seen;
        for (size_t i = 0; i < l.chain.size(); ++i) {
            const Node* n = find_node(l.chain[i]);
            if (!n) {
                throw std::invalid_argument("chain for " + l.ru + " references unknown node " +
                                            l.chain[i]);
            }
            if (!seen.insert(n->id).second) {
                throw std::invalid_argument("chain for " + l.ru + " repeats node " + n->id);
            }
            const bool last = (i + 1 == l.chain.size());
            if (last && n->kind != NodeKind::central) {
                throw std::invalid_argument("chain for " + l.ru + " must end at the central node");
            }
            if (!last && i > 0 && n->kind != NodeKind::relay) {
                throw std::invalid_argument("chain for " + l.ru + " has non-relay interior node " +
                                            n->id);
            }
        }
        if (l.link_rate_override_bps) {
            check_positive(*l.link_rate_override_bps,
                           ("link_rate_override for " + l.ru).c_str());
        }
    }

    // Field nodes must be reachable: every field node needs a chain.
    for (const auto& n : nodes) {
        if (n.kind == NodeKind::field && !linked_rus.count(n.id)) {
            throw std::invalid_argument("field node " + n.id +
                                        " has no hop chain / transceiver assignment");
        }
    }
}

}  // namespace thzfh
