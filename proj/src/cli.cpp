#include "wedge/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <sstream>

#include "wedge/json_io.hpp"
#include "wedge/verify.hpp"

namespace wedge::cli {

namespace {

using io::json;

// Payload options accept inline JSON or "@path" to read a file.
std::string resolve_payload(const std::string& value) {
    if (value.empty() || value[0] != '@') return value;
    std::ifstream in(value.substr(1), std::ios::binary);
    if (!in) throw ParseError("cannot read file '" + value.substr(1) + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json json_payload(const std::string& value) { return io::parse_text(resolve_payload(value)); }

void emit(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

struct MnOptions {
    bool mul = false;
    bool perp = false;
    int k = 1;
    std::string lambda;
};

struct ActOptions {
    std::string side;
    std::string element;
    std::string state;
};

struct MayaOptions {
    bool encode = false;
    bool decode = false;
    bool code = false;
    bool frobenius = false;
    int charge = 0;
    std::string lambda;
    std::string prefix;
    int lo = 0;
    int hi = 0;
    bool has_lo = false;
    bool has_hi = false;
};

struct CocycleOptions {
    bool closed_form = false;
    std::string a, b, x, y;
    int period = 1;
};

struct VerifyOptions {
    std::string suite;
    int weight_max = 8;
    int k_max = 6;
    int charge_max = 2;
    int index_max = 8;
    int quad_index_max = 5;
    int osc_max = 4;
    int period_max = 4;
    int power_max = 3;
    std::string side = "both";
    std::string mode = "both";
};

int run_mn(const MnOptions& opt, std::ostream& out) {
    if (opt.mul == opt.perp)
        throw ParseError("mn requires exactly one of --mul and --perp");
    Partition lambda = Partition::from_string(opt.lambda);
    BosonState state = BosonState::basis({0, lambda});
    BosonState result =
        opt.mul ? power_sum_times(opt.k, state) : power_sum_adjoint(opt.k, state);
    emit(out, io::to_json(result));
    return 0;
}

int run_act(const ActOptions& opt, std::ostream& out) {
    GlElement element = io::element_from_json(json_payload(opt.element));
    if (opt.side == "fermion") {
        FockVector v = io::fock_from_json(json_payload(opt.state));
        emit(out, io::to_json(fock_action(element, v)));
    } else if (opt.side == "boson") {
        BosonState w = io::boson_from_json(json_payload(opt.state));
        emit(out, io::to_json(boson_action(element, w)));
    } else {
        throw ParseError("--side must be 'fermion' or 'boson'");
    }
    return 0;
}

int run_maya(const MayaOptions& opt, std::ostream& out) {
    int modes = int(opt.encode) + int(opt.decode) + int(opt.code) + int(opt.frobenius);
    if (modes != 1)
        throw ParseError("maya requires exactly one of --encode/--decode/--code/--frobenius");
    if (opt.encode) {
        MayaDiagram m(opt.charge, Partition::from_string(opt.lambda));
        json j = io::to_json(m);
        j["prefix"] = m.prefix_string();
        emit(out, j);
    } else if (opt.decode) {
        emit(out, io::to_json(MayaDiagram::parse_prefix(opt.prefix)));
    } else if (opt.code) {
        MayaDiagram m(opt.charge, Partition::from_string(opt.lambda));
        auto [lo, hi] = m.default_code_window();
        if (opt.has_lo) lo = opt.lo;
        if (opt.has_hi) hi = opt.hi;
        if (lo > hi) throw DomainError("code window requires lo <= hi");
        emit(out, json{{"lo", lo}, {"hi", hi}, {"letters", m.code_window(lo, hi)}});
    } else {
        FrobeniusCoordinates f = frobenius_coordinates(Partition::from_string(opt.lambda));
        json u = json::array(), v = json::array();
        for (int d : f.arms_doubled) u.push_back(Rational(d, 2).str());
        for (int d : f.legs_doubled) v.push_back(Rational(d, 2).str());
        emit(out, json{{"u", u}, {"v", v}});
    }
    return 0;
}

int run_cocycle(const CocycleOptions& opt, std::ostream& out) {
    if (opt.closed_form) {
        LoopElement x = io::loop_from_json(json_payload(opt.x));
        LoopElement y = io::loop_from_json(json_payload(opt.y));
        Rational direct =
            central_cocycle(embed_loop(opt.period, x), embed_loop(opt.period, y));
        Rational closed;
        for (const auto& [power, mx] : x.terms) {
            auto it = y.terms.find(-power);
            if (it == y.terms.end()) continue;
            closed += Rational(power) * (mx * it->second).trace();
        }
        emit(out, json{{"direct", direct.str()},
                       {"closed_form", closed.str()},
                       {"equal", direct == closed}});
    } else {
        BandMatrix a = io::band_from_json(json_payload(opt.a));
        BandMatrix b = io::band_from_json(json_payload(opt.b));
        emit(out, json{{"cocycle", central_cocycle(a, b).str()}});
    }
    return 0;
}

int run_verify(const VerifyOptions& opt, std::ostream& out) {
    verify::SweepResult result;
    if (opt.suite == "mn") {
        result = verify::mn_suite(opt.weight_max, opt.k_max);
    } else if (opt.suite == "relations") {
        if (opt.side != "both" && opt.side != "fermion" && opt.side != "boson")
            throw ParseError("--side must be 'fermion', 'boson' or 'both'");
        result = verify::relations_suite(opt.charge_max, opt.weight_max, opt.index_max,
                                         opt.quad_index_max, opt.side != "boson",
                                         opt.side != "fermion");
    } else if (opt.suite == "cocycle") {
        result = verify::cocycle_suite(opt.index_max, opt.osc_max, opt.period_max, opt.power_max);
    } else if (opt.suite == "universal") {
        result = verify::universal_suite(opt.power_max, true, true);
    } else if (opt.suite == "correspondence") {
        if (opt.mode != "both" && opt.mode != "equivariance" && opt.mode != "coherence")
            throw ParseError("--mode must be 'equivariance', 'coherence' or 'both'");
        result = verify::correspondence_suite(opt.charge_max, opt.weight_max, opt.index_max,
                                              opt.k_max, opt.mode != "coherence",
                                              opt.mode != "equivariance");
    } else {
        throw ParseError("unknown verify suite '" + opt.suite +
                         "' (expected mn|relations|cocycle|universal|correspondence)");
    }
    json j{{"checked", result.checked}, {"failures", result.failures}};
    if (!result.failure_samples.empty()) j["failure_samples"] = result.failure_samples;
    emit(out, j);
    return result.failures == 0 ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations in the infinite wedge representation and its bosonic mirror"};
    app.name("wedge");
    app.require_subcommand(1);

    MnOptions mn_opt;
    auto* mn = app.add_subcommand("mn", "Expand a power-sum action in the Schur basis");
    mn->add_flag("--mul", mn_opt.mul, "multiply by the k-th power sum");
    mn->add_flag("--perp", mn_opt.perp, "apply the adjoint of the k-th power sum");
    mn->add_option("-k,--k", mn_opt.k, "power sum index")->required()->check(CLI::PositiveNumber);
    mn->add_option("--lambda", mn_opt.lambda, "partition, e.g. \"4,4,3\" ('' or [] for empty)");

    ActOptions act_opt;
    auto* act = app.add_subcommand("act", "Apply an algebra element to a state");
    act->add_option("--side", act_opt.side, "fermion | boson")->required();
    act->add_option("--element", act_opt.element, "element JSON (or @file)")->required();
    act->add_option("--state", act_opt.state, "state JSON (or @file)")->required();

    MayaOptions maya_opt;
    auto* maya = app.add_subcommand("maya", "Charge/partition encodings of Maya diagrams");
    maya->add_flag("--encode", maya_opt.encode, "charge + partition -> diagram");
    maya->add_flag("--decode", maya_opt.decode, "member prefix -> charge + partition");
    maya->add_flag("--code", maya_opt.code, "R/U letters over a window");
    maya->add_flag("--frobenius", maya_opt.frobenius, "diagonal arm/leg half-integers");
    maya->add_option("--charge", maya_opt.charge, "charge sector");
    maya->add_option("--lambda", maya_opt.lambda, "partition");
    maya->add_option("--prefix", maya_opt.prefix, "member prefix like \"4,3,1,0,-2,...\"");
    auto* lo = maya->add_option("--lo", maya_opt.lo, "window lower bound");
    auto* hi = maya->add_option("--hi", maya_opt.hi, "window upper bound");

    CocycleOptions co_opt;
    auto* co = app.add_subcommand("cocycle", "Evaluate the central 2-cocycle");
    co->add_flag("--closed-form", co_opt.closed_form,
                 "compare the direct sum with the shift-family closed form");
    co->add_option("--A", co_opt.a, "band matrix JSON (or @file)");
    co->add_option("--B", co_opt.b, "band matrix JSON (or @file)");
    co->add_option("--N", co_opt.period, "embedding period for --closed-form");
    co->add_option("--X", co_opt.x, "loop element JSON (or @file)");
    co->add_option("--Y", co_opt.y, "loop element JSON (or @file)");

    VerifyOptions v_opt;
    auto* verify_cmd = app.add_subcommand("verify", "Run an exhaustive verification suite");
    verify_cmd->add_option("suite", v_opt.suite, "mn|relations|cocycle|universal|correspondence")
        ->required();
    verify_cmd->add_option("--weight-max", v_opt.weight_max, "partition weight bound");
    verify_cmd->add_option("--k-max", v_opt.k_max, "power sum / strip length bound");
    verify_cmd->add_option("--charge-max", v_opt.charge_max, "charge sector bound");
    verify_cmd->add_option("--index-max", v_opt.index_max, "operator index bound");
    verify_cmd->add_option("--quad-index-max", v_opt.quad_index_max,
                           "index bound for commutator quadruples");
    verify_cmd->add_option("--osc-max", v_opt.osc_max, "shift family index bound");
    verify_cmd->add_option("--period-max", v_opt.period_max, "embedding period bound");
    verify_cmd->add_option("--power-max", v_opt.power_max, "loop power bound");
    verify_cmd->add_option("--side", v_opt.side, "relations: fermion|boson|both");
    verify_cmd->add_option("--mode", v_opt.mode, "correspondence: equivariance|coherence|both");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help() << std::flush;
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    maya_opt.has_lo = lo->count() > 0;
    maya_opt.has_hi = hi->count() > 0;

    try {
        if (mn->parsed()) return run_mn(mn_opt, out);
        if (act->parsed()) return run_act(act_opt, out);
        if (maya->parsed()) return run_maya(maya_opt, out);
        if (co->parsed()) return run_cocycle(co_opt, out);
        if (verify_cmd->parsed()) return run_verify(v_opt, out);
    } catch (const Error& e) {
        json diagnostic{{"error", std::string(typeid(e).name())}, {"message", e.what()}};
        // Use the stable class names, not the mangled RTTI ones.
        auto name_of = [&]() -> std::string {
            if (dynamic_cast<const ContainmentError*>(&e)) return "ContainmentError";
            if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
            if (dynamic_cast<const UnsupportedElement*>(&e)) return "UnsupportedElement";
            if (dynamic_cast<const SizeMismatch*>(&e)) return "SizeMismatch";
            if (dynamic_cast<const InsufficientVariables*>(&e)) return "InsufficientVariables";
            if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
            if (dynamic_cast<const OverflowError*>(&e)) return "OverflowError";
            return "Error";
        };
        diagnostic["error"] = name_of();
        err << diagnostic.dump() << "\n";
        return 1;
    }
    err << "no subcommand\n";
    return 2;
}

} // namespace wedge::cli
