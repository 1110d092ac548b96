#include "sqroot/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "sqroot/error.hpp"

namespace sqroot {

using nlohmann::json;

namespace {

json parse(std::string_view text)
{
    try {
        return json::parse(text.begin(), text.end());
    }
    catch (const json::parse_error& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
}

std::vector<std::string> string_list(const json& j, const char* what)
{
    if (!j.is_array())
        throw ParseError(0, std::string(what) + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& item : j) {
        if (!item.is_string())
            throw ParseError(0, std::string(what) + " must be an array of strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

int small_int(const json& j, const char* what)
{
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw ParseError(0, std::string(what) + " must be a non-negative integer");
    return static_cast<int>(j.get<long long>());
}

} // namespace

SetSplitInstance parse_instance_json(std::string_view text)
{
    const json doc = parse(text);
    if (!doc.is_object() || !doc.contains("ground_set") || !doc.contains("collection"))
        throw ParseError(0, "instance needs 'ground_set' and 'collection'");
    auto ground = string_list(doc["ground_set"], "ground_set");
    if (!doc["collection"].is_array())
        throw ParseError(0, "collection must be an array of arrays");
    std::vector<std::vector<std::string>> collection;
    for (const auto& subset : doc["collection"])
        collection.push_back(string_list(subset, "collection entry"));
    return SetSplitInstance::make(std::move(ground), std::move(collection));
}

std::string instance_to_json(const SetSplitInstance& inst)
{
    json doc;
    doc["ground_set"] = inst.ground_set;
    doc["collection"] = inst.collection;
    return doc.dump(2) + "\n";
}

Partition3 parse_partition_json(std::string_view text)
{
    const json doc = parse(text);
    if (!doc.is_object() || !doc.contains("parts") || !doc["parts"].is_array() || doc["parts"].size() != 3)
        throw ParseError(0, "witness needs 'parts' with exactly three arrays");
    Partition3 p;
    for (std::size_t i = 0; i < 3; ++i) {
        for (auto& e : string_list(doc["parts"][i], "part")) {
            if (!p.parts[i].insert(e).second)
                throw Error(ErrorCode::NotAPartition, "element '" + e + "' listed twice in part " + std::to_string(i + 1));
        }
    }
    return p;
}

std::string partition_to_json(const Partition3& p)
{
    json parts = json::array();
    for (const auto& part : p.parts)
        parts.push_back(std::vector<std::string>(part.begin(), part.end()));
    json doc;
    doc["parts"] = parts;
    return doc.dump() + "\n";
}

std::map<std::string, VertexRole> parse_roles_json(std::string_view text)
{
    const json doc = parse(text);
    if (!doc.is_object())
        throw ParseError(0, "role map must be an object");
    std::map<std::string, VertexRole> roles;
    for (const auto& [label, entry] : doc.items()) {
        if (!entry.is_object() || !entry.contains("role") || !entry["role"].is_string())
            throw ParseError(0, "role entry for '" + label + "' needs a 'role' string");
        const auto kind = parse_role_kind(entry["role"].get<std::string>());
        if (!kind)
            throw ParseError(0, "unknown role '" + entry["role"].get<std::string>() + "' for '" + label + "'");
        const json args = entry.value("args", json::array());
        if (!args.is_array())
            throw ParseError(0, "args for '" + label + "' must be an array");

        auto need = [&](std::size_t count) {
            if (args.size() != count)
                throw ParseError(0, "role " + std::string(to_string(*kind)) + " for '" + label + "' takes "
                                        + std::to_string(count) + " args");
        };
        VertexRole role;
        switch (*kind) {
        case RoleKind::Element:
            need(1);
            if (!args[0].is_string())
                throw ParseError(0, "Element arg for '" + label + "' must be a string");
            role = VertexRole::element_of(args[0].get<std::string>());
            break;
        case RoleKind::SetVertex:
            need(1);
            role = VertexRole::set_vertex(static_cast<std::size_t>(small_int(args[0], "set index")));
            break;
        case RoleKind::SetTail:
            need(2);
            role = VertexRole::set_tail(static_cast<std::size_t>(small_int(args[0], "set index")),
                                        small_int(args[1], "tail position"));
            break;
        case RoleKind::A:
            need(1);
            role = VertexRole::a(small_int(args[0], "index"));
            break;
        case RoleKind::B:
            need(1);
            role = VertexRole::b(small_int(args[0], "index"));
            break;
        case RoleKind::BTail:
            need(2);
            role = VertexRole::b_tail(small_int(args[0], "index"), small_int(args[1], "tail position"));
            break;
        }
        if (role.label() != label)
            throw ParseError(0, "label '" + label + "' does not match its role (expected '" + role.label() + "')");
        roles.emplace(label, std::move(role));
    }
    return roles;
}

std::string roles_to_json(const std::map<std::string, VertexRole>& roles)
{
    json doc = json::object();
    for (const auto& [label, role] : roles) {
        json args = json::array();
        switch (role.kind) {
        case RoleKind::Element: args.push_back(role.element); break;
        case RoleKind::SetVertex: args.push_back(role.set); break;
        case RoleKind::SetTail:
            args.push_back(role.set);
            args.push_back(role.j);
            break;
        case RoleKind::A:
        case RoleKind::B: args.push_back(role.i); break;
        case RoleKind::BTail:
            args.push_back(role.i);
            args.push_back(role.j);
            break;
        }
        doc[label] = {{"role", std::string(to_string(role.kind))}, {"args", args}};
    }
    return doc.dump(2) + "\n";
}

std::string origins_to_json(const ColoringReduction& red)
{
    json doc = json::object();
    for (const auto& [label, origin] : red.origin) {
        if (origin == ElementOrigin::Vertex) {
            doc[label] = {{"origin", "vertex"}};
        }
        else {
            const auto& e = red.subdivided_edge.at(label);
            doc[label] = {{"origin", "subdivision"}, {"edge", {e.u, e.v}}};
        }
    }
    return doc.dump(2) + "\n";
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::Io, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::Io, "cannot write '" + path + "'");
    out << text;
}

} // namespace sqroot
