#include "sqroot/dot.hpp"

#include <sstream>

namespace sqroot {

namespace {

std::string quoted(const std::string& s)
{
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\')
            out += '\\';
        out += ch;
    }
    return out + "\"";
}

const char* style_for(RoleKind kind)
{
    switch (kind) {
    case RoleKind::Element: return "shape=ellipse, style=filled, fillcolor=\"#9ecae1\"";
    case RoleKind::SetVertex: return "shape=box, style=filled, fillcolor=\"#a1d99b\"";
    case RoleKind::SetTail: return "shape=circle, style=filled, fillcolor=\"#d9d9d9\", fontsize=8";
    case RoleKind::A: return "shape=doublecircle, style=filled, fillcolor=\"#fc9272\"";
    case RoleKind::B: return "shape=diamond, style=filled, fillcolor=\"#fdae6b\"";
    case RoleKind::BTail: return "shape=circle, style=filled, fillcolor=\"#bdbdbd\", fontsize=8";
    }
    return "";
}

} // namespace

DotExport to_dot(const Graph& g, const std::map<std::string, VertexRole>* roles)
{
    DotExport out;
    std::ostringstream dot;
    dot << "graph G {\n";
    dot << "  node [shape=circle];\n";
    for (const auto& v : g.vertices()) {
        dot << "  " << quoted(v);
        if (roles) {
            auto it = roles->find(v);
            if (it == roles->end())
                out.warnings.push_back("no role for vertex '" + v + "', using default style");
            else
                dot << " [" << style_for(it->second.kind) << "]";
        }
        dot << ";\n";
    }
    for (const auto& e : g.edges())
        dot << "  " << quoted(e.u) << " -- " << quoted(e.v) << ";\n";
    dot << "}\n";
    out.text = dot.str();
    return out;
}

} // namespace sqroot
