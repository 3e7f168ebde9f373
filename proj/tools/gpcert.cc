#include <gpcert/bounds.hh>
#include <gpcert/certificate_io.hh>
#include <gpcert/construct.hh>
#include <gpcert/exact.hh>
#include <gpcert/transform.hh>
#include <gpcert/verify.hh>

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

using namespace gpcert;
using std::size_t;
using std::string;

namespace
{
    constexpr int exit_ok = 0;
    constexpr int exit_failed = 1;
    constexpr int exit_usage = 2;

    /// Raised for bad parameter combinations; reported with exit status 2.
    class UsageError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    struct Params
    {
        std::optional<size_t> n, r, k, i, j;
        std::optional<std::uint64_t> budget_nodes;
        std::optional<double> budget_seconds;
        unsigned threads = 1;
        string out;

        string kind, quantity, operation, scheme = "stars", file, graph_file, left, right;
        std::optional<size_t> complete;
        bool seed_trivial = false;
    };

    auto need(const std::optional<size_t> & v, const char * flag) -> size_t
    {
        if (! v)
            throw UsageError(string{"missing "} + flag);
        return *v;
    }

    auto emit(const nlohmann::json & doc, const string & out) -> void
    {
        if (out.empty() || out == "-")
            std::cout << dump(doc);
        else
            write_file(out, doc);
    }

    auto graph_document(const Graph & g) -> nlohmann::json
    {
        auto doc = to_json(g);
        doc["format_version"] = certificate_format_version;
        doc["kind"] = "graph";
        return doc;
    }

    /// A graph file is either a bare {vertices, edges} document or a biclique certificate,
    /// whose host is taken.
    auto load_graph(const string & path) -> Graph
    {
        auto doc = read_file(path);
        if (doc.is_object() && doc.contains("host") && doc.value("kind", string{}) == "biclique")
            return graph_from_json(doc.at("host"));
        return graph_from_json(doc);
    }

    /// "complete:N" or "file:PATH".
    auto graph_spec(const string & spec) -> Graph
    {
        if (spec.rfind("complete:", 0) == 0) {
            try {
                return Graph::complete(std::stoul(spec.substr(9)));
            }
            catch (const std::logic_error &) {
                throw UsageError("bad graph spec '" + spec + "'");
            }
        }
        if (spec.rfind("file:", 0) == 0)
            return load_graph(spec.substr(5));
        throw UsageError("graph spec must be complete:N or file:PATH, got '" + spec + "'");
    }

    auto scheme_for(const Params & p) -> PartitionScheme
    {
        if (p.scheme == "odd-cover")
            return odd_cover_k6_scheme();
        return star_scheme(need(p.n, "--n"));
    }

    auto construct(const Params & p) -> int
    {
        Certificate cert;
        if (p.kind == "trivial")
            cert = trivial_decomposition(need(p.n, "--n"), need(p.r, "--r"));
        else if (p.kind == "k3-scheme")
            cert = k3_scheme(scheme_for(p));
        else if (p.kind == "k4-scheme")
            cert = k4_scheme(scheme_for(p));
        else if (p.kind == "base-k4k6")
            cert = base_k4k6();
        else if (p.kind == "blowup")
            cert = blowup_product(base_k4k6(), need(p.i, "--i"), need(p.j, "--j"));
        else if (p.kind == "f4-recursive")
            cert = f4_recursive(need(p.n, "--n"));
        else if (p.kind == "f2k-lift")
            cert = lifted_recursive(need(p.k, "--k"), need(p.n, "--n"));
        else
            cert = BicliqueCertificate{Graph::complete(8), odd_cover_k8(), CoverClaim::odd_cover,
                {{"construction", "odd-cover-k8"}}};
        emit(to_json(cert), p.out);
        if (! p.out.empty() && p.out != "-")
            std::cerr << "wrote " << block_count(cert) << " blocks to " << p.out << "\n";
        return exit_ok;
    }

    auto verify(const Params & p) -> int
    {
        auto cert = certificate_from_json(read_file(p.file));
        Verdict verdict;
        try {
            verdict = check(cert);
        }
        catch (const StructuralError & err) {
            std::cout << "invalid: " << err.what() << "\n";
            return exit_failed;
        }
        if (verdict.ok) {
            std::cout << "verified: " << verdict.blocks << " blocks, " << verdict.host_size << " host elements\n";
            return exit_ok;
        }
        std::cout << "failed: " << verdict.blocks << " blocks, " << verdict.host_size << " host elements\n";
        for (auto & v : verdict.violations)
            std::cout << "  " << v << "\n";
        return exit_failed;
    }

    template <typename Options>
    auto apply_budget(Options & options, const Params & p) -> void
    {
        options.budget.max_nodes = p.budget_nodes;
        if (p.budget_seconds)
            options.budget.max_seconds = std::chrono::duration<double>(*p.budget_seconds);
        options.threads = p.threads;
    }

    template <typename Block>
    auto report(const SolveResult<Block> & result, const Certificate & cert, const Params & p) -> int
    {
        if (! p.out.empty())
            emit(to_json(cert), p.out);
        std::cerr << "nodes explored: " << result.nodes_explored << "\n";
        if (result.resolved()) {
            std::cout << "optimum: " << *result.optimum << "\n";
            return exit_ok;
        }
        std::cout << "unresolved (best ≤ " << result.best_count << ")\n";
        return exit_failed;
    }

    auto solve(const Params & p) -> int
    {
        if (p.quantity == "f2") {
            Graph g;
            if (p.complete)
                g = Graph::complete(*p.complete);
            else if (! p.graph_file.empty())
                g = load_graph(p.graph_file);
            else
                throw UsageError("solve f2 needs --complete N or --graph-file PATH");
            SolveOptions<Biclique> options;
            apply_budget(options, p);
            auto result = min_biclique_partition(g, options);
            return report(result, BicliqueCertificate{g, result.certificate, CoverClaim::partition, {}}, p);
        }
        if (p.quantity == "fr") {
            auto n = need(p.n, "--n"), r = need(p.r, "--r");
            auto host = HypergraphHost::complete(n, r);
            SolveOptions<MultipartiteBlock> options;
            apply_budget(options, p);
            if (p.seed_trivial)
                options.incumbent = trivial_decomposition(n, r).blocks;
            auto result = min_multipartite_partition(host, options);
            return report(result, HypergraphCertificate{host, result.certificate, {}}, p);
        }
        if (p.left.empty() || p.right.empty())
            throw UsageError("solve g needs --left and --right");
        auto g = graph_spec(p.left), h = graph_spec(p.right);
        ProductSolveOptions options;
        apply_budget(options, p);
        auto result = min_product_block_partition(g, h, options);
        return report(result, ProductCertificate{g, h, result.certificate, {}}, p);
    }

    auto bounds(const Params & p) -> int
    {
        auto n = need(p.n, "--n");
        Quantity q;
        if (p.quantity == "f2")
            q = Quantity::f(n, 2);
        else if (p.quantity == "f3")
            q = Quantity::f(n, 3);
        else if (p.quantity == "f4")
            q = Quantity::f(n, 4);
        else if (p.quantity == "f2k")
            q = Quantity::f(n, 2 * need(p.k, "--k"));
        else if (p.quantity == "fr")
            q = Quantity::f(n, need(p.r, "--r"));
        else if (p.quantity == "g-k3")
            q = Quantity::g(3, n);
        else if (p.quantity == "g-k4")
            q = Quantity::g(4, n);
        else
            q = Quantity::g(n, n);

        auto table = bound_table(q);
        std::printf("%s\n", table.quantity.c_str());
        std::printf("  %-18s %-6s %-14s %-10s %s\n", "name", "side", "exact", "value", "source");
        for (auto & row : table.rows) {
            auto exact = row.bound.exact.str();
            auto value = row.bound.value.str();
            std::printf("  %-18s %-6s %-14s %-10s %s\n", row.name.c_str(), to_string(row.direction).c_str(),
                exact.c_str(), value.c_str(), row.source.c_str());
        }
        auto lo = table.best_lower(), hi = table.best_upper();
        std::printf("  range: [%s, %s]\n", lo ? lo->str().c_str() : "-", hi ? hi->str().c_str() : "-");
        return table.consistent() ? exit_ok : exit_failed;
    }

    auto transform(const Params & p) -> int
    {
        if (p.operation == "weak-product") {
            if (p.left.empty() || p.right.empty())
                throw UsageError("transform weak-product needs --left and --right");
            emit(graph_document(weak_product(graph_spec(p.left), graph_spec(p.right))), p.out);
            return exit_ok;
        }
        if (p.file.empty())
            throw UsageError("transform double needs a product certificate file");
        auto cert = certificate_from_json(read_file(p.file));
        auto * product = std::get_if<ProductCertificate>(&cert);
        if (! product)
            throw UsageError("transform double needs a product certificate");
        emit(to_json(double_certificate(*product)), p.out);
        return exit_ok;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"Certificates, verification, exact search and bounds for complete multipartite partitions"};
    app.require_subcommand(1);
    Params p;

    auto add_sizes = [&](CLI::App * cmd) {
        cmd->add_option("--n", p.n, "number of vertices");
        cmd->add_option("--r", p.r, "uniformity");
        cmd->add_option("--k", p.k, "half the uniformity, for f_{2k}");
    };
    auto add_out = [&](CLI::App * cmd) { cmd->add_option("--out", p.out, "output path, '-' for standard output"); };

    auto * construct_cmd = app.add_subcommand("construct", "write a certificate");
    construct_cmd->add_option("kind", p.kind, "construction")
        ->required()
        ->check(CLI::IsMember({"trivial", "k3-scheme", "k4-scheme", "base-k4k6", "blowup", "f4-recursive", "f2k-lift",
            "odd-cover-k8"}));
    add_sizes(construct_cmd);
    construct_cmd->add_option("--i", p.i, "left blow-up factor");
    construct_cmd->add_option("--j", p.j, "right blow-up factor");
    construct_cmd->add_option("--scheme", p.scheme, "partition scheme for k3-scheme and k4-scheme")
        ->check(CLI::IsMember({"stars", "odd-cover"}));
    add_out(construct_cmd);

    auto * verify_cmd = app.add_subcommand("verify", "check a certificate file");
    verify_cmd->add_option("file", p.file, "certificate")->required();

    auto * solve_cmd = app.add_subcommand("solve", "exact minimum partition by branch and bound");
    solve_cmd->add_option("quantity", p.quantity, "f2, fr or g")->required()->check(CLI::IsMember({"f2", "fr", "g"}));
    add_sizes(solve_cmd);
    solve_cmd->add_option("--complete", p.complete, "solve on K_N");
    solve_cmd->add_option("--graph-file", p.graph_file, "graph document");
    solve_cmd->add_option("--left", p.left, "complete:N or file:PATH");
    solve_cmd->add_option("--right", p.right, "complete:N or file:PATH");
    solve_cmd->add_option("--budget-nodes", p.budget_nodes, "node limit");
    solve_cmd->add_option("--budget-seconds", p.budget_seconds, "wall-clock limit");
    solve_cmd->add_option("--threads", p.threads, "worker threads")->check(CLI::PositiveNumber);
    solve_cmd->add_flag("--seed-trivial", p.seed_trivial, "start fr from the trivial construction");
    add_out(solve_cmd);

    auto * bounds_cmd = app.add_subcommand("bounds", "bound table for one quantity");
    bounds_cmd->add_option("quantity", p.quantity, "f2, f3, f4, f2k, fr, g-k3, g-k4 or g")
        ->required()
        ->check(CLI::IsMember({"f2", "f3", "f4", "f2k", "fr", "g-k3", "g-k4", "g"}));
    add_sizes(bounds_cmd);

    auto * transform_cmd = app.add_subcommand("transform", "weak product graphs and doubled certificates");
    transform_cmd->add_option("operation", p.operation, "weak-product or double")
        ->required()
        ->check(CLI::IsMember({"weak-product", "double"}));
    transform_cmd->add_option("file", p.file, "product certificate, for double");
    transform_cmd->add_option("--left", p.left, "complete:N or file:PATH");
    transform_cmd->add_option("--right", p.right, "complete:N or file:PATH");
    add_out(transform_cmd);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto status = app.exit(e);
        return status == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*construct_cmd)
            return construct(p);
        if (*verify_cmd)
            return verify(p);
        if (*solve_cmd)
            return solve(p);
        if (*bounds_cmd)
            return bounds(p);
        return transform(p);
    }
    catch (const UsageError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const FormatError & e) {
        std::cerr << "format error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const InvalidArguments & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failed;
    }
}
