#include <gpcert/certificate_io.hh>

#include <fstream>
#include <sstream>

using nlohmann::json;
using std::size_t;
using std::string;
using std::vector;

namespace gpcert
{
    namespace
    {
        auto vertex_array(const VertexSet & s) -> json
        {
            json out = json::array();
            for (auto v : s)
                out.push_back(v);
            return out;
        }

        auto field(const json & doc, const char * key) -> const json &
        {
            if (! doc.is_object() || ! doc.contains(key))
                throw FormatError(string{"missing field '"} + key + "'");
            return doc.at(key);
        }

        auto parse_vertex(const json & v) -> Vertex
        {
            if (! v.is_number_integer() || v.get<std::int64_t>() < 0
                || v.get<std::uint64_t>() > std::numeric_limits<Vertex>::max())
                throw FormatError("vertex label " + v.dump() + " is not a non-negative 32-bit integer");
            return v.get<Vertex>();
        }

        auto parse_set(const json & arr) -> VertexSet
        {
            if (! arr.is_array())
                throw FormatError("expected an array of vertex labels, got " + arr.dump());
            vector<Vertex> labels;
            for (auto & v : arr)
                labels.push_back(parse_vertex(v));
            auto size = labels.size();
            auto set = make_vertex_set(std::move(labels));
            if (set.size() != size)
                throw FormatError("repeated label in " + arr.dump());
            return set;
        }

        auto parse_classes(const json & block, size_t expected) -> vector<VertexSet>
        {
            if (! block.is_array() || (expected && block.size() != expected))
                throw FormatError("block " + block.dump() + " should be an array of "
                        + (expected ? std::to_string(expected) + " " : string{}) + "vertex arrays");
            vector<VertexSet> classes;
            for (auto & c : block)
                classes.push_back(parse_set(c));
            return classes;
        }

        auto claim_name(CoverClaim c) -> string
        {
            return c == CoverClaim::partition ? "partition" : "odd-cover";
        }

        auto metadata_json(const Metadata & m) -> json
        {
            json out = json::object();
            for (auto & [k, v] : m)
                out[k] = v;
            return out;
        }

        auto parse_metadata(const json & doc) -> Metadata
        {
            Metadata m;
            if (! doc.contains("metadata"))
                return m;
            auto & meta = doc.at("metadata");
            if (! meta.is_object())
                throw FormatError("metadata must be an object");
            for (auto & [k, v] : meta.items())
                m[k] = v.is_string() ? v.get<string>() : v.dump();
            return m;
        }

        auto parse_count(const json & v, const char * what) -> size_t
        {
            if (! v.is_number_integer() || v.get<std::int64_t>() < 0)
                throw FormatError(string{what} + " must be a non-negative integer");
            return v.get<size_t>();
        }

        auto is_flat(const json & j) -> bool
        {
            if (! j.is_array())
                return ! j.is_object();
            return std::all_of(j.begin(), j.end(), [](const json & e) { return ! e.is_structured(); });
        }

        // Arrays made only of scalars or scalar arrays stay on one line, so each block or
        // edge occupies a single line.
        auto write(std::ostream & out, const json & j, int indent) -> void
        {
            auto pad = string(static_cast<size_t>(indent), ' ');
            if (j.is_object()) {
                if (j.empty()) {
                    out << "{}";
                    return;
                }
                out << "{\n";
                size_t i = 0;
                for (auto & [k, v] : j.items()) {
                    out << pad << "  " << json(k).dump() << ": ";
                    write(out, v, indent + 2);
                    out << (++i < j.size() ? ",\n" : "\n");
                }
                out << pad << "}";
            }
            else if (j.is_array()) {
                bool inline_all = std::all_of(j.begin(), j.end(), is_flat);
                if (inline_all) {
                    out << "[";
                    for (size_t i = 0; i < j.size(); ++i) {
                        if (i)
                            out << ", ";
                        if (j[i].is_array()) {
                            out << "[";
                            for (size_t k = 0; k < j[i].size(); ++k)
                                out << (k ? ", " : "") << j[i][k].dump();
                            out << "]";
                        }
                        else
                            out << j[i].dump();
                    }
                    out << "]";
                    return;
                }
                out << "[\n";
                for (size_t i = 0; i < j.size(); ++i) {
                    out << pad << "  ";
                    write(out, j[i], indent + 2);
                    out << (i + 1 < j.size() ? ",\n" : "\n");
                }
                out << pad << "]";
            }
            else
                out << j.dump();
        }
    }

    auto to_json(const Graph & g) -> json
    {
        json edges = json::array();
        for (auto & e : g.edges())
            edges.push_back({e.u, e.v});
        return {{"vertices", vertex_array(g.vertices())}, {"edges", edges}};
    }

    auto graph_from_json(const json & doc) -> Graph
    {
        auto vertices = parse_set(field(doc, "vertices"));
        auto & edges = field(doc, "edges");
        if (! edges.is_array())
            throw FormatError("edges must be an array");
        vector<Edge> parsed;
        for (auto & e : edges) {
            if (! e.is_array() || e.size() != 2)
                throw FormatError("edge " + e.dump() + " should be a pair of labels");
            parsed.push_back({parse_vertex(e[0]), parse_vertex(e[1])});
        }
        try {
            return Graph{std::move(vertices), std::move(parsed)};
        }
        catch (const StructuralError & err) {
            throw FormatError(string{"invalid graph: "} + err.what());
        }
    }

    auto to_json(const Certificate & cert) -> json
    {
        json doc;
        doc["format_version"] = certificate_format_version;
        json blocks = json::array();
        std::visit(
            [&](const auto & c) {
                using T = std::decay_t<decltype(c)>;
                doc["metadata"] = metadata_json(c.metadata);
                if constexpr (std::is_same_v<T, HypergraphCertificate>) {
                    doc["kind"] = "r-uniform";
                    json host{{"rank", c.host.rank()}};
                    if (c.host.is_complete())
                        host["complete"] = c.host.vertices().size();
                    else {
                        host["vertices"] = vertex_array(c.host.vertices());
                        json edges = json::array();
                        for (auto & e : c.host.edges())
                            edges.push_back(vertex_array(e));
                        host["edges"] = edges;
                    }
                    doc["host"] = host;
                    for (auto & b : c.blocks) {
                        json block = json::array();
                        for (auto & cl : b.classes)
                            block.push_back(vertex_array(cl));
                        blocks.push_back(block);
                    }
                }
                else if constexpr (std::is_same_v<T, ProductCertificate>) {
                    doc["kind"] = "product";
                    doc["host"] = {{"left", to_json(c.left)}, {"right", to_json(c.right)}};
                    for (auto & b : c.blocks)
                        blocks.push_back({vertex_array(b.left.x), vertex_array(b.left.y), vertex_array(b.right.x),
                            vertex_array(b.right.y)});
                }
                else {
                    doc["kind"] = "biclique";
                    doc["claim"] = claim_name(c.claim);
                    doc["host"] = to_json(c.host);
                    for (auto & b : c.blocks)
                        blocks.push_back({vertex_array(b.x), vertex_array(b.y)});
                }
            },
            cert);
        doc["blocks"] = blocks;
        return doc;
    }

    auto certificate_from_json(const json & doc) -> Certificate
    {
        if (! doc.is_object())
            throw FormatError("certificate must be a JSON object");
        auto & version = field(doc, "format_version");
        if (! version.is_number_integer() || version.get<int>() != certificate_format_version)
            throw FormatError("unsupported format_version " + version.dump());
        auto & kind_field = field(doc, "kind");
        if (! kind_field.is_string())
            throw FormatError("kind must be a string");
        auto kind = kind_field.get<string>();
        auto & host = field(doc, "host");
        auto & blocks = field(doc, "blocks");
        if (! blocks.is_array())
            throw FormatError("blocks must be an array");
        auto metadata = parse_metadata(doc);

        if (kind == "r-uniform") {
            auto rank = parse_count(field(host, "rank"), "rank");
            HypergraphCertificate cert;
            try {
                if (host.contains("complete"))
                    cert.host = HypergraphHost::complete(parse_count(host.at("complete"), "complete"), rank);
                else {
                    vector<Hyperedge> edges;
                    auto & list = field(host, "edges");
                    if (! list.is_array())
                        throw FormatError("host edges must be an array");
                    for (auto & e : list)
                        edges.push_back(parse_set(e));
                    cert.host = HypergraphHost::explicit_edges(rank, parse_set(field(host, "vertices")), std::move(edges));
                }
            }
            catch (const StructuralError & err) {
                throw FormatError(string{"invalid host: "} + err.what());
            }
            catch (const InvalidArguments & err) {
                throw FormatError(string{"invalid host: "} + err.what());
            }
            for (auto & b : blocks)
                cert.blocks.push_back(MultipartiteBlock{parse_classes(b, 0)});
            cert.metadata = std::move(metadata);
            return cert;
        }
        if (kind == "product") {
            ProductCertificate cert;
            cert.left = graph_from_json(field(host, "left"));
            cert.right = graph_from_json(field(host, "right"));
            for (auto & b : blocks) {
                auto c = parse_classes(b, 4);
                cert.blocks.push_back({Biclique{c[0], c[1]}, Biclique{c[2], c[3]}});
            }
            cert.metadata = std::move(metadata);
            return cert;
        }
        if (kind == "biclique") {
            BicliqueCertificate cert;
            cert.host = graph_from_json(host);
            auto claim = doc.value("claim", string{"partition"});
            if (claim == "partition")
                cert.claim = CoverClaim::partition;
            else if (claim == "odd-cover")
                cert.claim = CoverClaim::odd_cover;
            else
                throw FormatError("unknown claim '" + claim + "'");
            for (auto & b : blocks) {
                auto c = parse_classes(b, 2);
                cert.blocks.push_back(Biclique{c[0], c[1]});
            }
            cert.metadata = std::move(metadata);
            return cert;
        }
        throw FormatError("unknown certificate kind '" + kind + "'");
    }

    auto dump(const json & doc) -> string
    {
        std::ostringstream out;
        write(out, doc, 0);
        out << "\n";
        return out.str();
    }

    auto write_file(const std::filesystem::path & path, const json & doc) -> void
    {
        std::ofstream out(path, std::ios::binary);
        if (! out)
            throw std::runtime_error("cannot open " + path.string() + " for writing");
        out << dump(doc);
    }

    auto read_file(const std::filesystem::path & path) -> json
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw FormatError("cannot open " + path.string());
        try {
            return json::parse(in);
        }
        catch (const json::parse_error & err) {
            throw FormatError(string{"parse error: "} + err.what());
        }
    }
}
