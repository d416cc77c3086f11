#include "stacky/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <sstream>

namespace stacky {

using fga::GroupElement;
using fga::Int;
using fga::PresentedGroup;
using nlohmann::json;

bool PicardReport::pass() const {
    for (const StageReport& s : stages)
        for (const CheckResult& c : s.checks)
            if (!c.pass) return false;
    return true;
}

const fga::InvariantFactorDecomposition& PicardReport::decomposition() const {
    return stages.back().decomposition;
}

CoarsePicard build_coarse(const CurveSpec& spec) {
    const std::size_t k = spec.coarse.generators.size();
    fga::IntegerMatrix rel(0, k);
    for (const auto& row : spec.coarse.relations) rel.append_row(row);
    PresentedGroup group(k, std::move(rel), spec.coarse.generators);
    CoarsePicard coarse{group, {}};
    for (const auto& [label, coeffs] : spec.coarse.classes)
        coarse.named_classes.emplace(label, group.element(coeffs));
    return coarse;
}

namespace {

std::vector<StackyPointSpec> build_points(const CurveSpec& spec, const CoarsePicard& coarse) {
    std::vector<StackyPointSpec> points;
    for (const PointSpec& p : spec.points)
        points.push_back({p.label, p.order, coarse.group.element(p.ideal)});
    return points;
}

GerbeLayer build_gerbe_layer(const CurveSpec& spec, const RigidifiedPicard& stage_one) {
    const GerbeSpec& g = *spec.gerbe;
    GerbeLayer layer;
    layer.band.ab_invariants = g.band;
    if (g.obstruction) {
        PresentedGroup h2 = PresentedGroup::cyclic_product(*g.h2);
        fga::Homomorphism map =
            fga::make_hom(character_group(layer.band), h2, *g.obstruction);
        layer.obstruction = ObstructionData{std::move(h2), std::move(map)};
    }
    if (g.kernel) layer.kernel_orders = *g.kernel;
    for (const LiftSpec& lift : g.lifts)
        layer.lifts.push_back({lift.order, stage_one.pic.element(lift.target)});
    return layer;
}

std::vector<GeneratorInfo> stage_generators(const PresentedGroup& pic, std::size_t new_count,
                                            const std::vector<Int>& orders,
                                            const std::vector<std::string>& target_exprs,
                                            const std::string& pullback_name) {
    std::vector<GeneratorInfo> out;
    for (std::size_t i = 0; i < pic.generator_count(); ++i) {
        GeneratorInfo info;
        info.label = pic.labels()[i];
        if (i < new_count) {
            std::ostringstream expr;
            expr << orders[i] << "*" << info.label << " = " << pullback_name << "("
                 << target_exprs[i] << ")";
            info.expression = expr.str();
        } else {
            info.expression = pullback_name + "(" + info.label + ")";
        }
        info.order = fga::element_order(pic.generator(i));
        out.push_back(std::move(info));
    }
    return out;
}

StageReport rigidified_stage_report(const CurveSpec& spec, const RigidifiedPicard& y) {
    StageReport report;
    report.stage = "rigidified";
    report.decomposition = fga::decompose(y.pic);
    std::vector<std::string> ideal_exprs;
    for (const PointSpec& p : spec.points)
        ideal_exprs.push_back(format_linear_combination(p.ideal, spec.coarse.generators));
    report.generators =
        stage_generators(y.pic, spec.points.size(), y.point_orders, ideal_exprs, "pullback");
    report.checks = y.verification.checks;
    return report;
}

StageReport gerbe_stage_report(const CurveSpec& spec, const RigidifiedPicard& y,
                               const GerbePicard& x) {
    StageReport report;
    report.stage = "gerbe";
    report.decomposition = fga::decompose(x.pic);
    std::vector<Int> orders;
    std::vector<std::string> target_exprs;
    for (const LiftSpec& lift : spec.gerbe->lifts) {
        orders.push_back(lift.order);
        target_exprs.push_back(format_linear_combination(lift.target, y.pic.labels()));
    }
    report.generators =
        stage_generators(x.pic, spec.gerbe->lifts.size(), orders, target_exprs, "p*");
    report.checks = x.verification.checks;
    return report;
}

std::vector<std::string> collect_assumptions(const CurveSpec& spec) {
    std::vector<std::string> out;
    out.push_back(
        "tameness is assumed, not checked: the base field is not modeled, so char(k) must not "
        "divide any stabilizer order");
    if (spec.gerbe) {
        out.push_back("the band enters only through its abelianization invariants");
        if (spec.gerbe->obstruction)
            out.push_back(
                "the supplied h2 presentation and obstruction map are taken as given, not "
                "derived from geometry");
        if (spec.gerbe->kernel && !spec.gerbe->obstruction)
            out.push_back(
                "the claimed obstruction kernel orders are taken as given; no obstruction map "
                "was supplied to check them against");
    }
    return out;
}

}  // namespace

RunResult run_curve_spec_full(const CurveSpec& spec) {
    CoarsePicard coarse;
    std::vector<StackyPointSpec> points;
    std::optional<RigidifiedPicard> stage_one;
    try {
        coarse = build_coarse(spec);
        points = build_points(spec, coarse);
        stage_one.emplace(build_pic_rigidified(coarse, points));
    } catch (const std::exception& e) {
        throw RunError("stage-one", e.what());
    }

    PicardReport report;
    report.name = spec.name;
    report.stages.push_back(rigidified_stage_report(spec, *stage_one));

    std::optional<GerbePicard> stage_two;
    if (spec.gerbe) {
        try {
            GerbeLayer layer = build_gerbe_layer(spec, *stage_one);
            stage_two.emplace(compose_full(coarse, points, layer).gerbe);
        } catch (const std::exception& e) {
            throw RunError("gerbe", e.what());
        }
        report.stages.push_back(gerbe_stage_report(spec, *stage_one, *stage_two));
    }
    report.assumptions = collect_assumptions(spec);
    return RunResult{std::move(*stage_one), std::move(stage_two), std::move(report)};
}

PicardReport run_curve_spec(const CurveSpec& spec) { return run_curve_spec_full(spec).report; }

namespace {

json json_int(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return json(static_cast<long long>(v));
    return json(v.str());  // decimal string once past 64 bits
}

json json_decomposition(const fga::InvariantFactorDecomposition& d) {
    json torsion = json::array();
    for (const Int& t : d.torsion) torsion.push_back(json_int(t));
    return json{{"free_rank", d.free_rank}, {"torsion", torsion}};
}

json json_generators(const std::vector<GeneratorInfo>& gens) {
    json out = json::array();
    for (const GeneratorInfo& g : gens)
        out.push_back(json{{"label", g.label},
                           {"expression", g.expression},
                           {"order", g.order ? json_int(*g.order) : json("infinite")}});
    return out;
}

}  // namespace

std::string render(const PicardReport& report, RenderFormat format) {
    if (format == RenderFormat::json) {
        json stages = json::array();
        json all_checks = json::array();
        for (const StageReport& s : report.stages) {
            json checks = json::array();
            for (const CheckResult& c : s.checks) {
                checks.push_back(json{{"node", c.node}, {"pass", c.pass}});
                all_checks.push_back(json{{"stage", s.stage}, {"node", c.node}, {"pass", c.pass}});
            }
            stages.push_back(json{{"stage", s.stage},
                                  {"decomposition", json_decomposition(s.decomposition)},
                                  {"generators", json_generators(s.generators)},
                                  {"checks", checks}});
        }
        json doc{{"schema_version", 1},
                 {"name", report.name},
                 {"status", report.pass() ? "PASS" : "FAIL"},
                 {"decomposition", json_decomposition(report.decomposition())},
                 {"generators", json_generators(report.stages.back().generators)},
                 {"checks", all_checks},
                 {"assumptions", report.assumptions},
                 {"stages", stages}};
        return doc.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "curve: " << (report.name.empty() ? "(unnamed)" : report.name) << "\n";
    out << "status: " << (report.pass() ? "PASS" : "FAIL") << "\n";
    for (const StageReport& s : report.stages) {
        out << "\nstage " << s.stage << "\n";
        out << "  group: " << s.decomposition.to_string() << "\n";
        for (const GeneratorInfo& g : s.generators) {
            out << "  generator " << g.label << ": order "
                << (g.order ? g.order->str() : "infinite") << "  [" << g.expression << "]\n";
        }
        for (const CheckResult& c : s.checks)
            out << "  check " << c.node << ": " << (c.pass ? "pass" : "FAIL") << "\n";
    }
    if (!report.assumptions.empty()) {
        out << "\nassumptions:\n";
        for (const std::string& a : report.assumptions) out << "  - " << a << "\n";
    }
    out << "\nPic = " << report.decomposition().to_string() << "\n";
    return out.str();
}

std::string render_checks(const PicardReport& report) {
    std::ostringstream out;
    out << "curve: " << (report.name.empty() ? "(unnamed)" : report.name) << "\n";
    for (const StageReport& s : report.stages) {
        out << "stage " << s.stage << "\n";
        for (const CheckResult& c : s.checks)
            out << "  check " << c.node << ": " << (c.pass ? "pass" : "FAIL") << "\n";
    }
    out << "status: " << (report.pass() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

}  // namespace stacky
