#include "umb/tree_export.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace umb {

namespace {

void emit_subtree(std::ostringstream& out, const std::set<std::string>& prefixes,
                  const std::string& prefix, std::size_t leaf_len) {
    for (char bit : {'0', '1'}) {
        const std::string child = prefix + bit;
        if (!prefixes.count(child)) continue;
        const std::string parent_id = prefix.empty() ? "root" : "n" + prefix;
        out << "  n" << child << " [label=\"" << child << "\"";
        if (child.size() == leaf_len) out << ", shape=doublecircle";
        out << "];\n";
        out << "  " << parent_id << " -> n" << child << " [label=\"" << bit << "\"];\n";
        emit_subtree(out, prefixes, child, leaf_len);
    }
}

}  // namespace

std::string tree_export(const std::vector<BinaryWord>& words) {
    if (words.empty()) throw std::domain_error("tree_export: word set must be nonempty");
    const std::size_t n = words.front().size();
    std::set<std::string> prefixes;
    for (const auto& w : words) {
        if (w.size() != n) throw std::domain_error("tree_export: words must have equal length");
        const std::string s = w.str();
        for (std::size_t len = 1; len <= n; ++len) prefixes.insert(s.substr(0, len));
    }

    std::ostringstream out;
    out << "digraph prefix_tree {\n";
    out << "  node [shape=circle];\n";
    out << "  root [label=\"\"];\n";
    emit_subtree(out, prefixes, "", n);
    out << "}\n";
    return out.str();
}

}  // namespace umb
