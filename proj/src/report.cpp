#include "toric/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace toric {

namespace {

std::string pattern_str(const std::vector<int>& T) {
    std::string s = "{";
    for (size_t i = 0; i < T.size(); ++i) s += (i ? "," : "") + std::to_string(T[i]);
    return s + "}";
}

std::string full_profile_str(const std::vector<std::int64_t>& full) {
    std::string s = "(";
    for (size_t i = 0; i < full.size(); ++i) s += (i ? "," : "") + std::to_string(full[i]);
    return s + ")";
}

std::int64_t positive_degree(const Weight& w) {
    std::int64_t d = 0;
    for (auto m : w.coords) d += std::max<std::int64_t>(m, 0);
    return d;
}

}  // namespace

Diff compare(const CohomologyReport& engine, const CohomologyReport& oracle) {
    Diff diff;
    if (!(engine.space == oracle.space)) {
        diff.items.push_back("space mismatch");
        return diff;
    }
    if (!(engine.pi == oracle.pi)) {
        diff.items.push_back("poisson structure mismatch");
        return diff;
    }
    size_t kmax = std::min(engine.H.size(), oracle.H.size());
    if (engine.H.size() != oracle.H.size())
        diff.items.push_back("degree range mismatch");

    for (size_t k = 0; k < kmax; ++k) {
        const DegreeEntry& e = engine.H[k];
        const DegreeEntry& o = oracle.H[k];
        std::string at = "k=" + std::to_string(e.k) + ": ";
        if (e.infinite && !o.truncated) {
            diff.items.push_back(at + "engine reports infinite but oracle claims completeness");
            continue;
        }
        bool both_complete = !e.infinite && !e.truncated && !o.infinite && !o.truncated;
        if (both_complete && e.dim != o.dim) {
            diff.items.push_back(at + "dim " + std::to_string(e.dim) + " != " +
                                 std::to_string(o.dim));
            continue;
        }
        if (!e.has_weights || !o.has_weights) continue;

        // Per-weight multiplicities, restricted to the explored bound.
        std::optional<std::int64_t> bound = oracle.degree_bound;
        auto collect = [&](const DegreeEntry& d) {
            std::map<Weight, unsigned long long> m;
            for (const auto& we : d.weights)
                if (!bound || positive_degree(we.weight) <= *bound) m[we.weight] = we.mult;
            return m;
        };
        auto em = collect(e), om = collect(o);
        if (em != om) {
            for (const auto& [w, mult] : em) {
                auto it = om.find(w);
                if (it == om.end() || it->second != mult)
                    diff.items.push_back(
                        at + "weight " + full_profile_str(profile(engine.space, w).full) +
                        " engine mult " + std::to_string(mult) + ", oracle " +
                        (it == om.end() ? std::string("absent") : std::to_string(it->second)));
            }
            for (const auto& [w, mult] : om)
                if (!em.count(w))
                    diff.items.push_back(at + "weight " +
                                         full_profile_str(profile(engine.space, w).full) +
                                         " oracle mult " + std::to_string(mult) +
                                         ", engine absent");
        }
    }
    return diff;
}

nlohmann::json poisson_to_json(const PoissonStructure& pi) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : pi.upper_entries())
        entries.push_back({{"i", e.i}, {"j", e.j}, {"a", e.a.str()}});
    return entries;
}

PoissonStructure poisson_from_json(const nlohmann::json& j, std::optional<int> expect_n) {
    const nlohmann::json* entries = &j;
    int n = expect_n.value_or(0);
    if (j.is_object()) {
        if (!j.contains("entries")) throw std::invalid_argument("poisson json: missing entries");
        entries = &j.at("entries");
        if (j.contains("n")) {
            int jn = j.at("n").get<int>();
            if (expect_n && jn != *expect_n)
                throw std::invalid_argument("poisson json: n does not match the requested dimension");
            n = jn;
        }
    }
    if (n <= 0) throw std::invalid_argument("poisson json: unknown dimension");
    if (!entries->is_array()) throw std::invalid_argument("poisson json: entries must be an array");
    std::vector<PoissonStructure::Entry> parsed;
    for (const auto& e : *entries)
        parsed.push_back({e.at("i").get<int>(), e.at("j").get<int>(),
                          Scalar::parse(e.at("a").get<std::string>())});
    return PoissonStructure::from_entries(n, parsed);
}

nlohmann::json report_to_json(const CohomologyReport& report) {
    nlohmann::json j;
    j["space"] = {{"kind", report.space.projective() ? "projective" : "affine"},
                  {"n", report.space.n}};
    j["poisson"] = poisson_to_json(report.pi);
    j["source"] = report.source;
    if (report.degree_bound) j["degree_bound"] = *report.degree_bound;
    if (!report.space.projective()) j["variants"] = {"algebraic", "formal"};

    j["H"] = nlohmann::json::array();
    for (const auto& entry : report.H) {
        nlohmann::json je;
        je["k"] = entry.k;
        if (entry.infinite) {
            je["dim"] = "infinite";
            je["witness"] = entry.witness;
            je["listed_dim"] = entry.dim;
        } else {
            je["dim"] = entry.dim;
        }
        if (entry.truncated) je["truncated"] = true;
        if (entry.has_weights) {
            nlohmann::json ws = nlohmann::json::array();
            for (const auto& we : entry.weights)
                ws.push_back({{"full", we.full}, {"mult", we.mult}});
            je["weights"] = ws;
        }
        j["H"].push_back(je);
    }

    if (report.with_basis) {
        nlohmann::json basis = nlohmann::json::array();
        for (const auto& entry : report.H) {
            if (entry.basis.empty() && entry.dim == 0) continue;
            nlohmann::json block;
            block["k"] = entry.k;
            block["elements"] = nlohmann::json::array();
            for (const auto& b : entry.basis)
                block["elements"].push_back(
                    {{"weight", {{"coords", b.weight.coords}}},
                     {"frame", b.frame_indices},
                     {"complement", b.complement},
                     {"text", basis_element_str(report.space, entry.k, b)}});
            basis.push_back(block);
        }
        j["basis"] = basis;
    }
    return j;
}

CohomologyReport report_from_json(const nlohmann::json& j) {
    const auto& js = j.at("space");
    Space space = js.at("kind").get<std::string>() == "projective"
                      ? Space::cpn(js.at("n").get<int>())
                      : Space::cn(js.at("n").get<int>());
    CohomologyReport report{space, poisson_from_json(j.at("poisson"), space.n),
                            j.at("source").get<std::string>(), std::nullopt, false, {}};
    if (j.contains("degree_bound")) report.degree_bound = j.at("degree_bound").get<std::int64_t>();

    for (const auto& je : j.at("H")) {
        DegreeEntry entry;
        entry.k = je.at("k").get<int>();
        if (je.at("dim").is_string()) {
            entry.infinite = true;
            entry.witness = je.at("witness").get<std::vector<std::vector<int>>>();
            entry.dim = je.at("listed_dim").get<unsigned long long>();
        } else {
            entry.dim = je.at("dim").get<unsigned long long>();
        }
        entry.truncated = je.value("truncated", false);
        entry.has_weights = je.contains("weights");
        if (entry.has_weights) {
            for (const auto& w : je.at("weights")) {
                WeightEntry we;
                we.full = w.at("full").get<std::vector<std::int64_t>>();
                we.mult = w.at("mult").get<unsigned long long>();
                we.weight = space.projective()
                                ? Weight({we.full.begin() + 1, we.full.end()})
                                : Weight(we.full);
                entry.weights.push_back(std::move(we));
            }
        }
        report.H.push_back(std::move(entry));
    }

    if (j.contains("basis")) {
        report.with_basis = true;
        for (const auto& block : j.at("basis")) {
            int k = block.at("k").get<int>();
            for (auto& entry : report.H) {
                if (entry.k != k) continue;
                for (const auto& el : block.at("elements")) {
                    BasisDescriptor b;
                    b.weight =
                        Weight(el.at("weight").at("coords").get<std::vector<std::int64_t>>());
                    b.chi_exponents = profile(space, b.weight).full;
                    b.frame_indices = el.at("frame").get<std::vector<int>>();
                    b.complement = el.at("complement").get<std::vector<int>>();
                    entry.basis.push_back(std::move(b));
                }
            }
        }
    }
    return report;
}

std::string basis_element_str(const Space& space, int k, const BasisDescriptor& b) {
    std::ostringstream os;
    int base = space.projective() ? 0 : 1;
    bool wrote_z = false;
    for (size_t pos = 0; pos < b.chi_exponents.size(); ++pos) {
        std::int64_t e = b.chi_exponents[pos];
        if (e == 0) continue;
        if (wrote_z) os << ' ';
        os << 'z' << (base + static_cast<int>(pos));
        if (e != 1) os << '^' << e;
        wrote_z = true;
    }

    std::vector<int> vs;
    if (k == space.n) {
        // Top degree: V_I^n is one-dimensional, spanned by chi^I v_1^...^v_n.
        for (int i = 1; i <= space.n; ++i) vs.push_back(i);
    } else {
        vs = b.frame_indices;
        vs.insert(vs.end(), b.complement.begin(), b.complement.end());
    }
    std::string vpart;
    for (size_t i = 0; i < vs.size(); ++i)
        vpart += (i ? "^v" : "v") + std::to_string(vs[i]);

    if (!wrote_z && vpart.empty()) return "1";
    if (!wrote_z) return vpart;
    if (vpart.empty()) return os.str();
    return os.str() + " · " + vpart;
}

std::string report_to_table(const CohomologyReport& report) {
    std::ostringstream os;
    const Space& s = report.space;
    os << (s.projective() ? "CP^" : "C^") << s.n << "  Poisson cohomology ("
       << (report.source == "closed" ? "closed form" : "Schouten oracle") << ")";
    if (!s.projective()) os << "  [algebraic/formal]";
    os << "\n";
    os << "Pi =";
    auto entries = report.pi.upper_entries();
    if (entries.empty()) {
        os << " 0";
    } else {
        for (size_t t = 0; t < entries.size(); ++t) {
            os << (t ? " + " : " ") << '(' << entries[t].a.str() << ") e" << entries[t].i
               << "^e" << entries[t].j;
        }
    }
    os << "\n";
    if (report.degree_bound) os << "degree bound: " << *report.degree_bound << "\n";

    for (const auto& entry : report.H) {
        os << "k=" << entry.k << "  dim ";
        if (entry.infinite) {
            os << "infinite";
            for (const auto& T : entry.witness) os << " T=" << pattern_str(T);
            os << "  (" << entry.dim << " listed within bound)";
        } else {
            os << entry.dim;
        }
        if (entry.has_weights && !entry.weights.empty()) {
            os << "  weights:";
            for (const auto& we : entry.weights) {
                os << ' ' << full_profile_str(we.full);
                if (we.mult != 1) os << "x" << we.mult;
            }
        }
        os << "\n";
        if (report.with_basis && !entry.basis.empty()) {
            for (const auto& b : entry.basis)
                os << "    " << basis_element_str(s, entry.k, b) << "\n";
        }
    }
    return os.str();
}

}  // namespace toric
