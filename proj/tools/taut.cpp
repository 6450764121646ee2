#include "verify.hpp"

#include "taut/dr.hpp"
#include "taut/fz_relations.hpp"
#include "taut/golden.hpp"
#include "taut/graph_enum.hpp"
#include "taut/json_io.hpp"
#include "taut/kappa_ct.hpp"
#include "taut/parallel.hpp"
#include "taut/pbar.hpp"
#include "taut/pixton.hpp"
#include "taut/wk.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

using namespace taut;
using nlohmann::json;

namespace {

constexpr int kUsage = 2, kVerify = 3, kStability = 4;

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string partition_text(const Partition& p) {
    std::string out;
    for (int x : p.parts) out += (out.empty() ? "" : ",") + std::to_string(x);
    return out;
}

json kappa_relation_json(const KappaPolynomial& r) {
    json j = kappa_to_json(r.terms);
    j["g"] = r.g;
    j["n"] = r.n;
    j["d"] = r.d;
    j["sigma"] = r.sigma.parts;
    return j;
}

std::string show(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump(2);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tautological classes on moduli of curves"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string json_out;
    int threads = 1;
    app.add_option("--json", json_out, "also write the result as JSON to this file");
    app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

    int genus = 0, legs = 0, degree = -1, max_edges = -1;
    std::vector<int> a_vec, s_vec, sigma_vec, indices;
    bool count = false, rank = false, betti = false, check_table = false, list_basis = false;
    std::string family, suite = "fast";

    auto* graphs = app.add_subcommand("graphs", "stable graphs of genus g with n legs");
    graphs->add_option("--genus", genus)->required();
    graphs->add_option("--legs,--markings", legs);
    graphs->add_option("--max-edges", max_edges);
    graphs->add_flag("--count", count, "print only the number of isomorphism classes");

    auto* wk = app.add_subcommand("wk", "descendent integrals <tau_k1 ... tau_kn>_g");
    wk->add_option("--genus", genus)->required();
    wk->add_option("--indices", indices)->delimiter(',')->required();

    auto* relation = app.add_subcommand("relation", "FZ, compact-type, Pixton and pbar relations");
    relation->add_option("family", family)->required()->check(CLI::IsMember({"fz", "ct", "pixton", "pbar"}));
    relation->add_option("--genus", genus)->required();
    relation->add_option("--legs,--markings", legs);
    relation->add_option("--degree", degree);
    relation->add_option("--A", a_vec)->delimiter(',');
    relation->add_option("--sigma", sigma_vec)->delimiter(',');
    relation->add_flag("--rank", rank, "pbar: rank of the generated span");
    relation->add_flag("--betti", betti, "fz/ct: Betti numbers of the quotient");

    auto* dr = app.add_subcommand("dr", "double ramification cycle or a graph-sum component P^d");
    dr->add_option("--genus", genus)->required();
    dr->add_option("--S", s_vec)->delimiter(',')->required();
    dr->add_option("--degree", degree);

    auto* lambda = app.add_subcommand("lambda", "lambda_g on the moduli space of genus g curves");
    lambda->add_option("--genus", genus)->required();
    lambda->add_flag("--check-paper", check_table, "compare with the stored table");

    auto* kct = app.add_subcommand("kappa-ct", "kappa ring of compact type curves");
    kct->add_option("--genus", genus)->required();
    kct->add_option("--legs,--markings", legs);
    kct->add_option("--degree", degree);
    kct->add_flag("--betti", betti);
    kct->add_flag("--basis", list_basis);

    auto* verify = app.add_subcommand("verify", "run the acceptance suite");
    verify->add_option("--suite", suite)->check(CLI::IsMember({"fast", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }
    set_threads(threads);

    json result;
    int status = 0;
    try {
        if (*graphs) {
            auto classes = enumerate_graph_classes(genus, legs, max_edges);
            if (count) {
                result = classes.size();
            } else {
                result = json::array();
                for (const auto& c : classes) result.push_back({{"graph", graph_to_json(c.graph)}, {"aut", c.aut_order}});
            }
        } else if (*wk) {
            result = to_string(descendent_integral(genus, indices));
        } else if (*relation) {
            const Partition sigma(sigma_vec);
            if (family == "fz") {
                if (betti) {
                    if (degree < 0) degree = genus - 2;
                    result = fz_betti(genus, degree);
                } else {
                    if (degree < 0) throw std::invalid_argument("--degree is required");
                    if (!fz_valid(genus, degree, sigma)) throw std::invalid_argument("(g,d,sigma) is not a valid FZ triple");
                    result = kappa_relation_json(fz_relation(genus, degree, sigma));
                }
            } else if (family == "ct") {
                if (betti) {
                    result = json::array();
                    for (int d = 0; d <= 2 * genus - 2 + legs; ++d) result.push_back(ct_quotient_dim(genus, legs, d));
                } else {
                    if (degree < 0) throw std::invalid_argument("--degree is required");
                    if (!ct_valid(genus, legs, degree, sigma))
                        throw std::invalid_argument("(g,n,d,sigma) is not a valid compact-type index");
                    result = kappa_relation_json(ct_relation(genus, legs, degree, sigma));
                }
            } else if (family == "pixton") {
                if (degree < 0) throw std::invalid_argument("--degree is required");
                result = strata_to_json(pixton_R_ext(genus, a_vec, sigma, degree));
            } else {
                if (degree < 0) throw std::invalid_argument("--degree is required");
                if (rank) {
                    result = pbar_rank(genus, legs, degree);
                } else {
                    result = json::array();
                    for (const auto& gen : pbar_generators(genus, legs, degree))
                        result.push_back({{"graph", graph_to_json(gen.graph)},
                                          {"vertex", gen.vertex},
                                          {"A", gen.a},
                                          {"sigma", gen.sigma.parts},
                                          {"vertex_degree", gen.vertex_degree},
                                          {"class", strata_to_json(gen.value)}});
                }
            }
        } else if (*dr) {
            InterpolationReport report;
            auto x = degree < 0 ? dr_cycle(genus, s_vec, &report) : p_class(genus, s_vec, degree, &report);
            result = strata_to_json(x);
        } else if (*lambda) {
            InterpolationReport report;
            auto x = lambda_class(genus, &report);
            result = strata_to_json(x);
            if (check_table) {
                auto cmp = compare_with_golden(x, genus);
                if (!golden_checksum_ok(genus)) throw VerificationFailure("stored table checksum mismatch");
                if (!cmp.match) {
                    std::string msg = "lambda" + std::to_string(genus) + " differs from the stored table:";
                    for (const auto& m : cmp.mismatches) msg += "\n  " + m;
                    throw VerificationFailure(msg);
                }
                result = {{"match", true}, {"terms", cmp.expected_terms}, {"class", result}};
            }
        } else if (*kct) {
            if (legs == 0) {
                result = json::array();
                for (const auto& row : n0_surjection_report(genus))
                    result.push_back({{"d", row.d}, {"genus0_betti", row.genus0_betti},
                                      {"relation_quotient", row.relation_quotient}});
            } else if (list_basis) {
                if (degree < 0) throw std::invalid_argument("--degree is required with --basis");
                result = json::array();
                for (const auto& p : partition_basis(genus, legs, degree)) result.push_back(p.parts);
            } else {
                result = json::array();
                for (int d = 0; d <= 2 * genus - 2 + legs; ++d) result.push_back(ct_betti(genus, legs, d));
            }
        } else if (*verify) {
            result = json::array();
            bool ok = true;
            for (const auto& c : verify::criteria()) {
                if (suite == "fast" && c.slow) continue;
                auto start = std::chrono::steady_clock::now();
                verify::Outcome o;
                try {
                    o = c.run(suite == "fast");
                } catch (const std::exception& e) {
                    o = {false, std::string("exception: ") + e.what()};
                }
                double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                std::cout << (o.pass ? "PASS " : "FAIL ") << c.id << " " << c.name << " (" << secs << "s): " << o.detail
                          << std::endl;
                result.push_back({{"id", c.id}, {"name", c.name}, {"pass", o.pass}, {"seconds", secs}, {"detail", o.detail}});
                ok = ok && o.pass;
            }
            if (!ok) status = kVerify;
        }
    } catch (const StabilizationError& e) {
        std::cerr << "stabilization failure: " << e.what() << "\n";
        return kStability;
    } catch (const VerificationFailure& e) {
        std::cerr << e.what() << "\n";
        return kVerify;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }

    if (!*verify) std::cout << show(result) << "\n";
    if (!json_out.empty()) {
        std::ofstream f(json_out);
        if (!f) {
            std::cerr << "cannot write " << json_out << "\n";
            return kUsage;
        }
        f << result.dump(2) << "\n";
    }
    return status;
}
