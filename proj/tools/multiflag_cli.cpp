// multiflag: exact classification of line configurations up to simultaneous
// linear change of coordinates. JSON in, JSON out; diagnostics on stderr.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <multiflag/census.hpp>
#include <multiflag/decompose.hpp>
#include <multiflag/equivalence.hpp>
#include <multiflag/invariants.hpp>
#include <multiflag/json_io.hpp>

using namespace multiflag;

namespace {

json read_input(const std::string& path) {
    if (path.empty()) {
        json j;
        std::cin >> j;
        return j;
    }
    std::ifstream in(path);
    if (!in) throw field_error("BadInput", "cannot open " + path);
    json j;
    in >> j;
    return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int fail(const field_error& e) {
    std::cerr << json{{"error", e.code}, {"message", e.what()}}.dump() << "\n";
    return e.code == "InternalError" ? 2 : 1;
}

template <class F>
auto with_field(const FieldTag& tag, F&& f) {
    if (tag.rational) return f(Rational());
    return f(Fp(0, tag.prime));
}

std::vector<std::vector<ProjectivePoint<Rational>>> random_moduli(const PType& p, std::mt19937& rng) {
    std::uniform_int_distribution<long> dist(-5, 5);
    std::vector<std::vector<ProjectivePoint<Rational>>> q;
    for (const auto& [block, r] : p.K) {
        std::vector<ProjectivePoint<Rational>> pts;
        for (std::size_t h = 0; h + r + 1 < block.size(); ++h) {
            std::vector<Rational> v;
            bool zero = true;
            do {
                v.clear();
                zero = true;
                for (std::size_t i = 0; i < r; ++i) {
                    v.emplace_back(dist(rng));
                    if (!v.back().is_zero()) zero = false;
                }
            } while (zero);
            pts.emplace_back(std::move(v));
        }
        q.push_back(std::move(pts));
    }
    return q;
}

int run_selfcheck() {
    // Tits identity, exhaustive
    for (std::size_t m = 1; m <= 6; ++m)
        for (std::size_t n = 1; n <= 6; ++n)
            for (std::size_t kmask = 0; kmask < (1u << m); ++kmask) {
                std::set<int> kset;
                for (std::size_t i = 0; i < m; ++i)
                    if (kmask & (1u << i)) kset.insert(static_cast<int>(i) + 1);
                for (std::size_t r = 1; r <= n; ++r) {
                    auto d = DimensionVector::of_support(kset, r, m);
                    if (tits_form(d) != tits_form_dkr(kset.size(), r))
                        throw field_error("InternalError", "Tits form identity failed");
                    if (is_indecomposable_dimvec(d) && tits_form(d) > 1)
                        throw field_error("InternalError", "indecomposable with Q > 1");
                }
            }
    // round trips with random moduli
    std::mt19937 rng(20240901);
    for (std::size_t n = 2; n <= 6; ++n)
        for (std::size_t m = 1; m <= 6; ++m)
            for (const auto& p : enumerate_ptypes(n, m))
                for (int rep = 0; rep < 5; ++rep) {
                    PType pc = p;
                    pc.canonicalize();
                    auto q = random_moduli(pc, rng);
                    if (!round_trip_check(pc, q, n, m, Rational()))
                        throw field_error("InternalError", "round trip failed");
                }
    // finite-field censuses
    for (auto [n, m, q, orbits] : {std::tuple<std::size_t, std::size_t, std::int64_t, std::size_t>{2, 3, 2, 5},
                                   {2, 4, 2, 14},
                                   {2, 4, 3, 15}}) {
        auto rep = run_census(n, m, q);
        if (!rep.agreement || rep.brute_force_orbits != orbits)
            throw field_error("InternalError", "census disagreement");
    }
    emit(json{{"selfcheck", "ok"}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classifier for configurations of lines under diag(GL(n))"};
    app.require_subcommand(1);

    // enumerate-ptypes
    auto* enumerate_cmd = app.add_subcommand("enumerate-ptypes", "list the finite index set");
    std::size_t en_n = 0, en_m = 0;
    bool en_count_only = false;
    enumerate_cmd->add_option("--n", en_n, "ambient dimension")->required();
    enumerate_cmd->add_option("--m", en_m, "number of lines")->required();
    enumerate_cmd->add_flag("--count-only", en_count_only, "print only the count");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "classify a configuration (JSON)");
    std::string cl_input;
    classify_cmd->add_option("--input", cl_input, "input file (default: stdin)");

    // represent
    auto* represent_cmd = app.add_subcommand("represent", "build the explicit representative of (ptype, q)");
    std::string rp_input;
    represent_cmd->add_option("--input", rp_input, "input file (default: stdin)");

    // equiv
    auto* equiv_cmd = app.add_subcommand("equiv", "decide orbit equivalence of two configurations");
    std::string eq_a, eq_b;
    equiv_cmd->add_option("--a", eq_a, "first configuration")->required();
    equiv_cmd->add_option("--b", eq_b, "second configuration")->required();

    // census
    auto* census_cmd = app.add_subcommand("census", "brute-force finite-field orbit census");
    std::size_t ce_n = 0, ce_m = 0;
    std::int64_t ce_p = 0;
    bool ce_check = false;
    census_cmd->add_option("--n", ce_n, "ambient dimension")->required();
    census_cmd->add_option("--m", ce_m, "number of lines")->required();
    census_cmd->add_option("--prime", ce_p, "field prime")->required();
    census_cmd->add_flag("--check", ce_check, "exit nonzero on disagreement");

    // invariants
    auto* inv_cmd = app.add_subcommand("invariants", "numeric invariants and predicates");
    std::size_t in_n = 0, in_m = 0;
    std::string in_ptype;
    inv_cmd->add_option("--n", in_n, "ambient dimension")->required();
    inv_cmd->add_option("--m", in_m, "number of lines")->required();
    inv_cmd->add_option("--ptype", in_ptype, "ptype JSON file for per-stratum invariants");

    auto* selfcheck_cmd = app.add_subcommand("selfcheck", "run the exhaustive invariant suites");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*enumerate_cmd) {
            auto list = enumerate_ptypes(en_n, en_m);
            if (en_count_only) {
                emit(json{{"count", list.size()}});
            } else {
                json arr = json::array();
                for (const auto& p : list) arr.push_back(ptype_to_json(p));
                emit(json{{"count", list.size()}, {"ptypes", arr}});
            }
            return 0;
        }
        if (*classify_cmd) {
            json j = read_input(cl_input);
            auto tag = field_tag_from_json(j.at("field"));
            with_field(tag, [&](auto like) {
                auto config = configuration_from_json(j, like);
                emit(classification_to_json(classify(config)));
            });
            return 0;
        }
        if (*represent_cmd) {
            json j = read_input(rp_input);
            auto tag = field_tag_from_json(j.at("field"));
            const std::size_t n = j.at("n").get<std::size_t>();
            const std::size_t m = j.at("m").get<std::size_t>();
            PType p = ptype_from_json(j.at("ptype"));
            with_field(tag, [&](auto like) {
                using S = decltype(like);
                std::vector<std::vector<ProjectivePoint<S>>> q;
                if (j.contains("q"))
                    for (const auto& block : j.at("q")) {
                        std::vector<ProjectivePoint<S>> pts;
                        for (const auto& pt : block) pts.push_back(point_from_json(pt, like));
                        q.push_back(std::move(pts));
                    }
                else
                    q.resize(p.K.size());
                auto config = build_representative(p, q, n, m, like);
                emit(configuration_to_json(config, tag));
            });
            return 0;
        }
        if (*equiv_cmd) {
            json ja = read_input(eq_a);
            json jb = read_input(eq_b);
            auto tag = field_tag_from_json(ja.at("field"));
            auto tag_b = field_tag_from_json(jb.at("field"));
            if (tag.rational != tag_b.rational || (!tag.rational && tag.prime != tag_b.prime))
                throw field_error("FieldMismatch", "configurations over different fields");
            with_field(tag, [&](auto like) {
                auto a = configuration_from_json(ja, like);
                auto b = configuration_from_json(jb, like);
                auto res = equivalent(a, b);
                json out{{"equivalent", res.equivalent},
                         {"witness", res.witness ? matrix_to_json(*res.witness) : json(nullptr)}};
                emit(out);
            });
            return 0;
        }
        if (*census_cmd) {
            auto rep = run_census(ce_n, ce_m, ce_p);
            emit(census_to_json(rep));
            if (ce_check && !rep.agreement) {
                std::cerr << json{{"error", "CensusDisagreement"},
                                  {"message", "pipeline and brute force differ"}}.dump() << "\n";
                return 2;
            }
            return 0;
        }
        if (*inv_cmd) {
            json out;
            auto open = has_open_orbit(in_n, in_m);
            out["open_orbit"] = open.exists;
            if (open.exists) out["open_orbit_witness"] = ptype_to_json(open.witness);
            out["finite_type"] = is_finite_type(in_n, in_m);
            if (!in_ptype.empty()) {
                PType p = ptype_from_json(read_input(in_ptype));
                out["r"] = r_of(p);
                out["orbit_dimension"] = orbit_dimension(p, in_n, in_m);
                out["stabilizer"] = stabilizer_to_json(stabilizer_shape(p, in_n, in_m));
                json tits = json::array();
                for (const auto& b : p.I)
                    tits.push_back(tits_form(DimensionVector::of_support(b, 1, in_m)));
                for (const auto& b : p.J)
                    tits.push_back(tits_form(DimensionVector::of_support(b, b.size() - 1, in_m)));
                for (const auto& [b, r] : p.K)
                    tits.push_back(tits_form(DimensionVector::of_support(b, r, in_m)));
                out["tits_forms"] = tits;
            }
            emit(out);
            return 0;
        }
        if (*selfcheck_cmd) return run_selfcheck();
    } catch (const field_error& e) {
        return fail(e);
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "BadInput"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
    return 0;
}
