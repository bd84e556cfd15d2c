#include "cli.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "polyspace/construct.hpp"
#include "polyspace/edge_lengths.hpp"
#include "polyspace/errors.hpp"
#include "polyspace/json_io.hpp"
#include "polyspace/quotient.hpp"
#include "polyspace/random.hpp"
#include "polyspace/verify.hpp"

namespace polyspace::cli {

namespace {

EdgeLengths parse_ell(const std::string& text) {
    std::vector<double> lengths;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        try {
            std::size_t used = 0;
            const double value = std::stod(token, &used);
            while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) {
                ++used;
            }
            if (used != token.size()) throw std::invalid_argument(token);
            lengths.push_back(value);
        } catch (const std::exception&) {
            throw ValidationError("cannot parse edge length \"" + token + "\"");
        }
    }
    return EdgeLengths(std::move(lengths));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open file " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Polygon load_polygon(const std::string& path, const ToleranceConfig& tol) {
    Polygon p = io::polygon_from_json(read_file(path));
    p.validate(tol);
    return p;
}

std::string format_double(double value) {
    std::ostringstream out;
    out << std::setprecision(17) << value;
    return out.str();
}

void append_csv(const std::string& path, const verify::ExperimentReport& report) {
    const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
    std::ofstream out(path, std::ios::app);
    if (!out) throw ValidationError("cannot open CSV file " + path);
    if (fresh) out << io::csv_header() << "\n";
    out << io::to_csv_row(report) << "\n";
}

struct Session {
    ToleranceConfig tol;
    std::string out_path;
    std::ostream* out = nullptr;
    int exit_code = 0;

    void emit(const std::string& text) {
        if (out_path.empty()) {
            *out << text << "\n";
            return;
        }
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw ValidationError("cannot open output file " + out_path);
        file << text << "\n";
    }
};

void add_tolerance_flags(CLI::App& app, ToleranceConfig& tol) {
    app.add_option("--eps-rank", tol.eps_rank, "Relative singular-value cutoff for rank")
        ->capture_default_str();
    app.add_option("--eps-gram", tol.eps_gram, "Relative Gram-entry tolerance")
        ->capture_default_str();
    app.add_option("--eps-align", tol.eps_align,
                   "Alignment residual tolerance, relative to the edge-length total")
        ->capture_default_str();
    app.add_option("--eps-root", tol.eps_root, "Root-finding tolerance")
        ->capture_default_str();
    app.add_option("--cond-floor", tol.cond_floor,
                   "Minimum sigma_k/sigma_1 for well-conditioned samples")
        ->capture_default_str();
}

void setup_check(CLI::App& app, Session& session) {
    auto* cmd = app.add_subcommand("check",
                                   "Classify edge lengths as Interior, Border or Infeasible");
    auto lengths = std::make_shared<std::vector<double>>();
    auto ell_text = std::make_shared<std::string>();
    cmd->add_option("lengths", *lengths, "Edge lengths l_1 l_2 ...");
    cmd->add_option("--ell", *ell_text, "Edge lengths as a comma-separated list");
    cmd->callback([&session, lengths, ell_text] {
        EdgeLengths ell = ell_text->empty() ? EdgeLengths(*lengths) : parse_ell(*ell_text);
        session.emit(to_string(classify_feasibility(ell)));
    });
}

void setup_build(CLI::App& app, Session& session) {
    auto* cmd = app.add_subcommand("build", "Construct a polygon");
    cmd->require_subcommand(1);

    auto ell_text = std::make_shared<std::string>();
    auto d = std::make_shared<int>(2);
    auto k = std::make_shared<int>(0);
    auto pattern = std::make_shared<std::string>();
    auto seed = std::make_shared<std::uint64_t>(0);

    auto* planar = cmd->add_subcommand("planar", "Convex cyclic realization in the plane");
    planar->add_option("--ell", *ell_text, "Edge lengths, comma-separated")->required();
    planar->add_option("--d", *d, "Ambient dimension (zero-padded above 2)")
        ->capture_default_str();
    planar->callback([&session, ell_text, d] {
        if (*d < 2) throw ValidationError("ambient dimension must be at least 2");
        Polygon p = construct::build_planar(parse_ell(*ell_text), session.tol);
        if (*d > 2) p = embed(p, *d);
        session.emit(io::to_json(p));
    });

    auto* degenerate = cmd->add_subcommand("degenerate", "Collinear polygon from a sign pattern");
    degenerate->add_option("--ell", *ell_text, "Edge lengths, comma-separated")->required();
    degenerate->add_option("--pattern", *pattern, "Edge directions, e.g. \"++--\"")->required();
    degenerate->add_option("--d", *d, "Ambient dimension")->capture_default_str();
    degenerate->callback([&session, ell_text, pattern, d] {
        Polygon p = construct::build_degenerate(
            parse_ell(*ell_text), construct::SignPattern::parse(*pattern), *d, session.tol);
        session.emit(io::to_json(p));
    });

    auto* dim = cmd->add_subcommand("dim", "Polygon of prescribed dimension via bending");
    dim->add_option("--ell", *ell_text, "Edge lengths, comma-separated")->required();
    dim->add_option("--k", *k, "Target polygon dimension")->required();
    dim->add_option("--d", *d, "Ambient dimension (defaults to k)");
    dim->add_option("--seed", *seed, "Random seed")->capture_default_str();
    dim->callback([&session, ell_text, k, d, seed, dim] {
        const int ambient = dim->count("--d") ? *d : *k;
        Polygon p = construct::raise_to_dimension(parse_ell(*ell_text), *k, ambient, *seed,
                                                  session.tol);
        session.emit(io::to_json(p));
    });
}

void setup_dim(CLI::App& app, Session& session) {
    auto* cmd = app.add_subcommand("dim", "Print the dimension of a polygon");
    auto in = std::make_shared<std::string>();
    cmd->add_option("--in", *in, "Polygon JSON file")->required();
    cmd->callback([&session, in] {
        session.emit(std::to_string(dimension(load_polygon(*in, session.tol), session.tol)));
    });
}

void setup_bend(CLI::App& app, Session& session) {
    auto* cmd = app.add_subcommand("bend", "Bend a polygon, raising its dimension by one");
    auto in = std::make_shared<std::string>();
    auto index = std::make_shared<int>(0);
    auto seed = std::make_shared<std::uint64_t>(0);
    cmd->add_option("--in", *in, "Polygon JSON file")->required();
    cmd->add_option("--index", *index, "1-based vertex to bend (default: first qualifying)");
    cmd->add_option("--seed", *seed, "Random seed for the bend direction")
        ->capture_default_str();
    cmd->callback([&session, in, index, seed] {
        Polygon p = load_polygon(*in, session.tol);
        session.emit(io::to_json(construct::bend_random(p, *index, *seed, session.tol)));
    });
}

void setup_equiv(CLI::App& app, Session& session) {
    auto* cmd = app.add_subcommand("equiv", "Decide orbit equivalence of two polygons");
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    auto group = std::make_shared<std::string>("so");
    cmd->add_option("--a", *a, "First polygon JSON file")->required();
    cmd->add_option("--b", *b, "Second polygon JSON file")->required();
    cmd->add_option("--group", *group, "Equivalence group: so (rotations) or o (plus reflections)")
        ->check(CLI::IsMember({"so", "o"}))
        ->capture_default_str();
    cmd->callback([&session, a, b, group] {
        Polygon p = load_polygon(*a, session.tol);
        Polygon q = load_polygon(*b, session.tol);
        const bool proper = *group == "so";
        const bool same = proper ? quotient::so_equivalent(p, q, session.tol)
                                 : quotient::o_equivalent(p, q, session.tol);
        const auto aligned = quotient::align(p, q, proper, session.tol);
        session.emit(std::string(same ? "true" : "false") + " " +
                     format_double(aligned.residual));
    });
}

void setup_fiber(CLI::App& app, Session& session) {
    auto* cmd = app.add_subcommand(
        "fiber", "Fiber of the embedding map over the polygon's moduli point");
    auto in = std::make_shared<std::string>();
    auto from_d = std::make_shared<int>(0);
    cmd->add_option("--in", *in, "Polygon JSON file")->required();
    cmd->add_option("--from-d", *from_d, "Source ambient dimension d of the map into d+1")
        ->required();
    cmd->callback([&session, in, from_d] {
        if (*from_d < 2) throw ValidationError("--from-d must be at least 2");
        Polygon p = load_polygon(*in, session.tol);
        const int rank = dimension(p, session.tol);
        if (rank > *from_d + 1) {
            throw ValidationError("polygon dimension " + std::to_string(rank) +
                                  " exceeds " + std::to_string(*from_d + 1) +
                                  "; no moduli point there");
        }
        Polygon representative = embed(project_to_span(p, session.tol), *from_d + 1);
        const auto fiber =
            quotient::phi_fiber(quotient::moduli_point(representative, session.tol), session.tol);
        std::string text = "[";
        for (std::size_t i = 0; i < fiber.size(); ++i) {
            if (i > 0) text += ",";
            text += io::to_json(fiber[i]);
        }
        text += "]";
        session.emit(text);
    });
}

void setup_sample(CLI::App& app, Session& session) {
    auto* cmd = app.add_subcommand("sample", "Draw random polygons, one JSON document per line");
    auto ell_text = std::make_shared<std::string>();
    auto d = std::make_shared<int>(3);
    auto count = std::make_shared<int>(1);
    auto seed = std::make_shared<std::uint64_t>(0);
    cmd->add_option("--ell", *ell_text, "Edge lengths, comma-separated")->required();
    cmd->add_option("--d", *d, "Ambient dimension")->capture_default_str();
    cmd->add_option("--count", *count, "Number of samples")->capture_default_str();
    cmd->add_option("--seed", *seed, "Random seed")->capture_default_str();
    cmd->callback([&session, ell_text, d, count, seed] {
        if (*count < 1) throw ValidationError("--count must be positive");
        const EdgeLengths ell = parse_ell(*ell_text);
        std::string text;
        for (int i = 0; i < *count; ++i) {
            if (i > 0) text += "\n";
            text += io::to_json(construct::sample(
                ell, *d, derive_seed(*seed, static_cast<std::uint64_t>(i)), session.tol));
        }
        session.emit(text);
    });
}

void setup_verify(CLI::App& app, Session& session) {
    auto* cmd = app.add_subcommand("verify", "Run a randomized verification experiment");
    auto name = std::make_shared<std::string>();
    auto ell_text = std::make_shared<std::string>();
    auto d = std::make_shared<int>(3);
    auto trials = std::make_shared<int>(500);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto csv = std::make_shared<std::string>();
    cmd->add_option("experiment", *name, "One of: dimension-bound, dimension-range, chirality, "
                                         "fiber, stabilization, degenerate")
        ->required()
        ->check(CLI::IsMember({"dimension-bound", "dimension-range", "chirality", "fiber",
                               "stabilization", "degenerate"}));
    cmd->add_option("--ell", *ell_text, "Edge lengths, comma-separated")->required();
    cmd->add_option("--d", *d, "Ambient dimension")->capture_default_str();
    cmd->add_option("--trials", *trials, "Trials (stabilization: sample-set size)")
        ->capture_default_str();
    cmd->add_option("--seed", *seed, "Random seed")->capture_default_str();
    cmd->add_option("--csv", *csv, "Append a CSV summary row to this file");
    cmd->callback([&session, name, ell_text, d, trials, seed, csv] {
        const EdgeLengths ell = parse_ell(*ell_text);
        const verify::ExperimentReport report = [&]() -> verify::ExperimentReport {
            if (*name == "dimension-bound") {
                return verify::verify_dimension_bound(ell, *d, *trials, *seed, session.tol);
            }
            if (*name == "dimension-range") {
                return verify::verify_dimension_range(ell, *d, *seed, session.tol);
            }
            if (*name == "chirality") {
                return verify::verify_chirality(ell, *d, *trials, *seed, session.tol);
            }
            if (*name == "fiber") {
                return verify::verify_fiber_and_surjectivity(ell, *d, *trials, *seed,
                                                             session.tol);
            }
            if (*name == "stabilization") {
                return verify::verify_stabilization(ell, *trials, *seed, session.tol);
            }
            return verify::verify_degenerate_classes(ell, session.tol);
        }();
        session.emit(io::to_json(report));
        if (!csv->empty()) append_csv(*csv, report);
        if (!report.passed()) session.exit_code = 1;
    });
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Session session;
    session.out = &out;

    CLI::App app{"Polygon spaces with fixed edge lengths: construction, orbit equivalence "
                 "and moduli across ambient dimensions"};
    app.require_subcommand(1);
    app.fallthrough();
    add_tolerance_flags(app, session.tol);
    app.add_option("--out", session.out_path, "Write primary output to a file instead of stdout");

    setup_check(app, session);
    setup_build(app, session);
    setup_dim(app, session);
    setup_bend(app, session);
    setup_equiv(app, session);
    setup_fiber(app, session);
    setup_sample(app, session);
    setup_verify(app, session);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    return session.exit_code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("polyspace");
    for (const auto& arg : args) argv.push_back(arg.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace polyspace::cli
