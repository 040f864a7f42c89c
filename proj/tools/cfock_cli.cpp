// cfock: apply Fock-space operators, verify the defining relations, and
// export crystal graphs for the affine type C family.
//
// Exit codes: 0 success (and verification passed), 1 verification failure,
// 2 usage or input error.

#include "cfock/crystal.hpp"
#include "cfock/fock.hpp"
#include "cfock/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

struct Options {
    int n = 2;
    int charge = 0;
    int depth = 0;
    int max_boxes = 0;
    int colour = 0;
    bool phi = false;
    std::string diagram_json;
    std::string ops;
    std::string convention = "upper";
    std::string format = "json";
    std::string sig_format = "text";
    std::string out;
};

void write_output(const std::string& out_path, const std::string& payload) {
    std::string text = payload;
    if (text.empty() || text.back() != '\n') text.push_back('\n');
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file: " + out_path);
    file << text;
}

cfock::Convention parse_convention(const std::string& name) {
    if (name == "upper") return cfock::Convention::Upper;
    if (name == "lower") return cfock::Convention::Lower;
    throw std::invalid_argument("unknown convention '" + name + "' (expected upper or lower)");
}

cfock::Diagram start_diagram(const Options& opt) {
    if (opt.phi != opt.diagram_json.empty())
        throw std::invalid_argument("exactly one of --phi and --diagram is required");
    if (opt.phi) return cfock::Diagram(opt.n, opt.charge);
    return cfock::diagram_from_json(opt.diagram_json, opt.n, opt.charge);
}

// Operator word token: E<i>, F<i>, T<i>+, T<i>-, or Td.
struct OpToken {
    char kind;  // 'E', 'F', 'T', 'd' (T_d)
    int colour = 0;
    int sign = 0;
};

OpToken parse_token(const std::string& token, int n) {
    const auto fail = [&]() -> OpToken {
        throw std::invalid_argument("unknown operator token '" + token + "'");
    };
    if (token.size() < 2) return fail();
    if (token == "Td") return OpToken{'d', 0, 0};
    const char kind = token[0];
    if (kind != 'E' && kind != 'F' && kind != 'T') return fail();
    std::size_t digits_end = token.size();
    int sign = 0;
    if (kind == 'T') {
        const char last = token.back();
        if (last != '+' && last != '-') return fail();
        sign = last == '+' ? 1 : -1;
        digits_end = token.size() - 1;
    }
    if (digits_end < 2) return fail();
    int colour = 0;
    for (std::size_t p = 1; p < digits_end; ++p) {
        if (token[p] < '0' || token[p] > '9') return fail();
        colour = colour * 10 + (token[p] - '0');
    }
    if (colour > n) throw std::invalid_argument("operator token '" + token + "': colour exceeds n");
    return OpToken{kind, colour, sign};
}

int cmd_act(const Options& opt) {
    const cfock::FockEngine engine{parse_convention(opt.convention), cfock::colour_of};
    cfock::Combination v(start_diagram(opt));
    std::istringstream words(opt.ops);
    std::vector<std::string> tokens;
    for (std::string token; words >> token;) tokens.push_back(token);
    // composition order: the rightmost token acts first
    for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
        const OpToken op = parse_token(*it, opt.n);
        switch (op.kind) {
            case 'E': v = engine.act_e(op.colour, v); break;
            case 'F': v = engine.act_f(op.colour, v); break;
            case 'T': v = engine.act_t(op.colour, op.sign, v); break;
            case 'd': v = engine.act_td(v); break;
        }
    }
    write_output(opt.out, opt.format == "text" ? cfock::to_text(v) : cfock::to_json(v));
    return 0;
}

int cmd_verify(const Options& opt) {
    const cfock::Report report =
        cfock::verify_relations(opt.n, opt.charge, opt.max_boxes, parse_convention(opt.convention));
    write_output(opt.out, cfock::to_json(report));
    return report.ok() ? 0 : 1;
}

int cmd_graph(const Options& opt) {
    const cfock::CrystalGraph g = cfock::bfs_component(opt.n, opt.charge, opt.depth);
    std::string payload;
    if (opt.format == "dot")
        payload = cfock::to_dot(g);
    else if (opt.format == "text")
        payload = cfock::to_text(g);
    else
        payload = cfock::to_json(g);
    write_output(opt.out, payload);
    return 0;
}

int cmd_signature(const Options& opt) {
    const cfock::Diagram y = start_diagram(opt);
    if (opt.colour < 0 || opt.colour > opt.n)
        throw std::invalid_argument("--i must lie in 0..n");
    const cfock::Signature sig = cfock::i_signature(y, opt.colour);
    const auto survivors = cfock::reduce_signature(sig.word);
    const auto e_at = cfock::e_tilde_site(y, opt.colour);
    const auto f_at = cfock::f_tilde_site(y, opt.colour);
    const auto site_str = [](const std::optional<cfock::Corner>& c) {
        if (!c) return std::string("none");
        std::ostringstream out;
        out << "(" << c->column << "," << c->y << ")";
        return out.str();
    };
    std::ostringstream out;
    if (opt.sig_format == "json") {
        std::ostringstream sites;
        sites << "[";
        for (std::size_t p = 0; p < sig.sites.size(); ++p) {
            if (p > 0) sites << ",";
            sites << "[" << sig.sites[p].column << "," << sig.sites[p].y << "]";
        }
        sites << "]";
        out << "{\"sigma\":\"" << sig.word << "\",\"sites\":" << sites.str() << ",\"J\":[";
        for (std::size_t p = 0; p < survivors.size(); ++p) {
            if (p > 0) out << ",";
            out << survivors[p];
        }
        out << "],\"epsilon\":" << cfock::epsilon(y, opt.colour)
            << ",\"phi\":" << cfock::phi(y, opt.colour);
        const auto site_json = [&out](const char* key, const std::optional<cfock::Corner>& c) {
            out << ",\"" << key << "\":";
            if (c)
                out << "[" << c->column << "," << c->y << "]";
            else
                out << "null";
        };
        site_json("e_site", e_at);
        site_json("f_site", f_at);
        out << "}";
    } else {
        out << "sigma: " << (sig.word.empty() ? "(empty)" : sig.word) << "\n";
        out << "sites:";
        for (const cfock::Corner& c : sig.sites) out << " (" << c.column << "," << c.y << ")";
        out << "\n";
        out << "J: {";
        for (std::size_t p = 0; p < survivors.size(); ++p) {
            if (p > 0) out << ",";
            out << survivors[p];
        }
        out << "}\n";
        out << "epsilon: " << cfock::epsilon(y, opt.colour) << "\n";
        out << "phi: " << cfock::phi(y, opt.colour) << "\n";
        out << "e_tilde: " << site_str(e_at) << "\n";
        out << "f_tilde: " << site_str(f_at) << "\n";
    }
    write_output(opt.out, out.str());
    return 0;
}

int cmd_multiplicities(const Options& opt) {
    const auto table = cfock::multiplicity_table(cfock::bfs_component(opt.n, opt.charge, opt.depth));
    write_output(opt.out, opt.format == "text" ? cfock::to_text(table) : cfock::to_json(table));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Fock-space operators and crystal graphs for affine type C"};
    app.require_subcommand(1);

    Options opt;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--n", opt.n, "rank parameter (n >= 2)")->capture_default_str();
        cmd->add_option("--charge,--k", opt.charge, "charge k in 0..n")->capture_default_str();
    };
    const auto add_source = [&](CLI::App* cmd) {
        cmd->add_flag("--phi", opt.phi, "start from the empty diagram of the given charge");
        cmd->add_option("--diagram", opt.diagram_json,
                        "diagram JSON, e.g. '{\"columns\":[2,1]}' (n/charge fall back to the flags)");
    };
    const auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", opt.out, "write output to a file instead of stdout");
    };

    CLI::App* act = app.add_subcommand("act", "apply an operator word to a diagram");
    add_common(act);
    add_source(act);
    add_out(act);
    act->add_option("--ops", opt.ops, "operator word (tokens E<i>, F<i>, T<i>+, T<i>-, Td), applied right-to-left")
        ->required();
    act->add_option("--convention", opt.convention, "upper or lower")
        ->capture_default_str()
        ->check(CLI::IsMember({"upper", "lower"}));
    act->add_option("--format", opt.format, "json or text")
        ->capture_default_str()
        ->check(CLI::IsMember({"json", "text"}));

    CLI::App* verify = app.add_subcommand("verify", "check the defining relations on all small diagrams");
    add_common(verify);
    add_out(verify);
    verify->add_option("--max-boxes", opt.max_boxes, "check diagrams with at most this many boxes")
        ->required();
    verify->add_option("--convention", opt.convention, "upper or lower")
        ->capture_default_str()
        ->check(CLI::IsMember({"upper", "lower"}));

    CLI::App* graph = app.add_subcommand("graph", "generate the crystal component of the vacuum");
    add_common(graph);
    add_out(graph);
    graph->add_option("--depth", opt.depth, "levels to generate (level = box count)")->required();
    graph->add_option("--format", opt.format, "json, dot, or text")
        ->capture_default_str()
        ->check(CLI::IsMember({"json", "dot", "text"}));

    CLI::App* signature = app.add_subcommand("signature", "inspect an i-signature and its reduction");
    add_common(signature);
    add_source(signature);
    add_out(signature);
    signature->add_option("--i", opt.colour, "corner colour to inspect")->required();
    signature->add_option("--format", opt.sig_format, "text or json")
        ->capture_default_str()
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* mult = app.add_subcommand("multiplicities", "weight multiplicities of the crystal component");
    add_common(mult);
    add_out(mult);
    mult->add_option("--depth", opt.depth, "levels to generate")->required();
    mult->add_option("--format", opt.format, "json or text")
        ->capture_default_str()
        ->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (opt.n < 2) throw std::invalid_argument("--n must be at least 2");
        if (opt.charge < 0 || opt.charge > opt.n) throw std::invalid_argument("--charge must lie in 0..n");
        if (opt.depth < 0) throw std::invalid_argument("--depth must be >= 0");
        if (opt.max_boxes < 0) throw std::invalid_argument("--max-boxes must be >= 0");
        if (app.got_subcommand(act)) return cmd_act(opt);
        if (app.got_subcommand(verify)) return cmd_verify(opt);
        if (app.got_subcommand(graph)) return cmd_graph(opt);
        if (app.got_subcommand(signature)) return cmd_signature(opt);
        if (app.got_subcommand(mult)) return cmd_multiplicities(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
