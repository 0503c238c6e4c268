#include "implace/slicing_tree.hpp"

#include <cstdio>

namespace implace {

namespace {

void append_double(std::string &out, double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    out += buf;
}

} // namespace

std::string SlicingTree::node_name(NodeId id) const {
    const SlicingNode &node = nodes.at(static_cast<std::size_t>(id));
    if (node.is_leaf())
        return modules[static_cast<std::size_t>(node.module_index)].name;
    return "__c" + std::to_string(node.step);
}

double node_area(const SlicingTree &tree, NodeId id) {
    return tree.nodes.at(static_cast<std::size_t>(id)).area;
}

std::vector<SoftModule> leaves(const SlicingTree &tree) {
    std::vector<SoftModule> out;
    out.reserve(tree.leaf_count());
    if (tree.root == kNoNode)
        return out;
    // Iterative first-then-second traversal; trees can be deep.
    std::vector<NodeId> stack{tree.root};
    while (!stack.empty()) {
        const NodeId id = stack.back();
        stack.pop_back();
        const SlicingNode &node = tree.nodes[static_cast<std::size_t>(id)];
        if (node.is_leaf()) {
            out.push_back(tree.modules[static_cast<std::size_t>(node.module_index)]);
        } else {
            stack.push_back(node.second);
            stack.push_back(node.first);
        }
    }
    return out;
}

std::string dump(const SlicingTree &tree) {
    std::string out;
    if (tree.root == kNoNode)
        return out;
    std::vector<std::pair<NodeId, int>> stack{{tree.root, 0}};
    while (!stack.empty()) {
        const auto [id, depth] = stack.back();
        stack.pop_back();
        const SlicingNode &node = tree.nodes[static_cast<std::size_t>(id)];
        out.append(static_cast<std::size_t>(depth) * 2, ' ');
        if (node.is_leaf()) {
            out += "leaf ";
            out += tree.modules[static_cast<std::size_t>(node.module_index)].name;
            out += " area=";
        } else {
            out += "step=" + std::to_string(node.step) + " area=";
        }
        append_double(out, node.area);
        out += '\n';
        if (!node.is_leaf()) {
            stack.emplace_back(node.second, depth + 1);
            stack.emplace_back(node.first, depth + 1);
        }
    }
    return out;
}

} // namespace implace
