#include "froblab/commands.hpp"

#include <cstdlib>
#include <sstream>
#include <string>

namespace froblab {

namespace {

Json error_report(const std::string& command, const std::string& message) {
    Json j;
    j["command"] = command;
    j["error"] = message;
    return j;
}

std::string format_functional(const Algebra& A, const std::vector<CycScalar>& lambda) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << format_scalar(lambda[i]) << ")*" << A.labels[i] << "^";
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

Json axiom_report_json(const AxiomReport& rep) {
    Json j;
    j["pass"] = rep.pass;
    j["counit_multiplicative"] = rep.counit_multiplicative;
    Json verdicts = Json::array();
    for (const AxiomVerdict& v : rep.verdicts) {
        Json e;
        e["axiom"] = v.axiom;
        e["pass"] = v.pass;
        if (!v.pass) e["witness"] = v.witness;
        verdicts.push_back(std::move(e));
    }
    j["verdicts"] = std::move(verdicts);
    return j;
}

Json frobenius_result_json(const Algebra& A, const FrobeniusResult& fr) {
    Json j;
    j["quasi_frobenius"] = fr.quasi_frobenius;
    j["frobenius"] = fr.frobenius;
    Json m;
    m["method"] = fr.method;
    m["iso_certificate"] = fr.iso_certificate;
    m["oracle_certificate"] = fr.oracle_certificate;
    m["iso_randomized_used"] = fr.iso_randomized_used;
    m["decided_by_socle_criterion"] = fr.decided_by_socle_criterion;
    if (!fr.witness_functional.empty())
        m["witness_functional"] = format_functional(A, fr.witness_functional);
    j["method_report"] = std::move(m);
    return j;
}

}  // namespace

int axiom_triple_cap() {
    if (const char* e = std::getenv("FROBLAB_MAX_DIM")) {
        int v = std::atoi(e);
        if (v > 0) return v;
    }
    return 64;
}

CommandResult cmd_taft_analyze(int p, std::uint64_t seed) {
    if (!is_prime(p))
        return {2, error_report("taft-analyze", "p = " + std::to_string(p) + " is not prime")};
    try {
        TaftAlgebra T = build_taft(p);
        HopfData Hd = to_hopf_data(T);
        AxiomReport axioms = check_hopf(Hd, axiom_triple_cap());
        TaftRadicalReport rad = radical_check(T);

        std::vector<Module> simples;
        for (int k = 0; k < p; ++k) simples.push_back(simple_module(T, k));
        auto simple_index = [&](const Module& S) {
            for (int k = 0; k < p; ++k)
                if (is_isomorphic(S, simples[static_cast<size_t>(k)], seed).isomorphic) return k;
            throw Error("taft-analyze: module is not isomorphic to any simple");
        };

        Json table = Json::array();
        std::ostringstream tsv;
        tsv << "k\tdim\tsoc\tcosoc\tD\n";
        for (int k = 0; k < p; ++k) {
            Module P = projective_cover(T, k);
            Module soc = socle_module(P, rad.radical_basis);
            Module top = cosocle_module(P, rad.radical_basis);
            int soc_idx = simple_index(soc);
            int top_idx = simple_index(top);
            int D = dual_index_D(T, k).D;
            Json row;
            row["k"] = k;
            row["dim"] = P.dim;
            row["soc"] = soc_idx;
            row["cosoc"] = top_idx;
            row["D"] = D;
            table.push_back(std::move(row));
            tsv << k << "\t" << P.dim << "\t" << soc_idx << "\t" << top_idx << "\t" << D << "\n";
        }

        FrobeniusOptions opts;
        opts.seed = seed;
        FrobeniusResult fr = is_frobenius(*T.B, opts);

        Json j;
        j["command"] = "taft-analyze";
        j["seed"] = seed;
        j["p"] = p;
        j["dim"] = T.B->n;
        j["hopf_axioms"] = axiom_report_json(axioms);
        j["radical"] = Json{{"ok", rad.ok},
                            {"dim", rad.radical_dim},
                            {"nilpotency_index", rad.nilpotency_index}};
        j["projectives"] = std::move(table);
        j["projectives_tsv"] = tsv.str();
        j["frobenius"] = frobenius_result_json(*T.B, fr);
        j["bundle"] = bundle_to_json(bundle_of(Hd));
        int status = (axioms.pass && rad.ok && fr.frobenius) ? 0 : 1;
        return {status, std::move(j)};
    } catch (const Error& e) {
        return {1, error_report("taft-analyze", e.what())};
    }
}

CommandResult cmd_frobcheck(const std::string& bundle_text,
                            const std::optional<std::string>& projectives_text,
                            std::uint64_t seed) {
    AlgebraBundle b;
    try {
        b = bundle_from_json(Json::parse(bundle_text));
    } catch (const Json::exception& e) {
        return {2, error_report("frobcheck", std::string("malformed bundle: ") + e.what())};
    } catch (const Error& e) {
        return {2, error_report("frobcheck", e.what())};
    }
    FrobeniusOptions opts;
    opts.seed = seed;
    Json soc_cosoc_rows = Json::array();
    if (projectives_text) {
        try {
            Json pj = Json::parse(*projectives_text);
            if (!pj.is_object() || !pj.contains("soc_cosoc") || !pj["soc_cosoc"].is_array())
                throw Error("projectives file must be an object with a \"soc_cosoc\" array");
            for (const auto& e : pj["soc_cosoc"]) {
                if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                    !e[1].is_number_integer())
                    throw Error("soc_cosoc entries must be [soc, cosoc] integer pairs");
                opts.soc_cosoc_dims.push_back({e[0].get<int>(), e[1].get<int>()});
                soc_cosoc_rows.push_back(e);
            }
            if (pj.contains("quasi_frobenius")) {
                if (!pj["quasi_frobenius"].is_boolean())
                    throw Error("quasi_frobenius must be a boolean");
                opts.qf_known = pj["quasi_frobenius"].get<bool>();
            }
        } catch (const Json::exception& e) {
            return {2, error_report("frobcheck", std::string("malformed projectives: ") + e.what())};
        } catch (const Error& e) {
            return {2, error_report("frobcheck", std::string("malformed projectives: ") + e.what())};
        }
    }
    const Algebra& A = *b.algebra;
    if (!opts.qf_known && A.n > 64)
        return {1, error_report("frobcheck",
                                "dimension " + std::to_string(A.n) +
                                    " exceeds the generic quasi-Frobenius budget; supply "
                                    "--projectives with a quasi_frobenius field")};
    if (A.n > 100) {
        opts.iso_basis_tries = 4;
        opts.iso_random_tries = 8;
    }
    try {
        FrobeniusResult fr = is_frobenius(A, opts);
        Json j;
        j["command"] = "frobcheck";
        j["seed"] = seed;
        j["dim"] = A.n;
        Json verdicts = frobenius_result_json(A, fr);
        j["quasi_frobenius"] = verdicts["quasi_frobenius"];
        j["frobenius"] = verdicts["frobenius"];
        j["method_report"] = verdicts["method_report"];
        if (!soc_cosoc_rows.empty()) j["soc_cosoc_table"] = std::move(soc_cosoc_rows);
        return {0, std::move(j)};
    } catch (const Error& e) {
        return {1, error_report("frobcheck", e.what())};
    }
}

CommandResult cmd_axioms_verify(const std::string& bundle_text, const std::string& law) {
    if (law != "hopf" && law != "weak-hopf" && law != "quasi-hopf")
        return {2, error_report("axioms-verify", "unknown law \"" + law + "\"")};
    HopfData Hd;
    try {
        Hd = hopf_data_of(bundle_from_json(Json::parse(bundle_text)));
    } catch (const Json::exception& e) {
        return {2, error_report("axioms-verify", std::string("malformed bundle: ") + e.what())};
    } catch (const Error& e) {
        return {2, error_report("axioms-verify", e.what())};
    }
    try {
        AxiomReport rep;
        if (law == "hopf")
            rep = check_hopf(Hd, axiom_triple_cap());
        else if (law == "weak-hopf")
            rep = check_weak_hopf(Hd, axiom_triple_cap());
        else
            rep = check_quasi_hopf(Hd);
        Json j;
        j["command"] = "axioms-verify";
        j["law"] = law;
        j["dim"] = Hd.A->n;
        j["report"] = axiom_report_json(rep);
        return {rep.pass ? 0 : 1, std::move(j)};
    } catch (const Error& e) {
        // Structural impossibility (missing quasi-Hopf data, cubic cap
        // exceeded): the input cannot be verified as given.
        return {2, error_report("axioms-verify", e.what())};
    }
}

CommandResult cmd_taftd(int p, const std::vector<long long>& d, bool reconstruct,
                        std::uint64_t seed) {
    if (!is_prime(p))
        return {2, error_report("taftd", "p = " + std::to_string(p) + " is not prime")};
    if (static_cast<int>(d.size()) != p)
        return {2, error_report("taftd", "dimension vector has length " +
                                             std::to_string(d.size()) + ", expected " +
                                             std::to_string(p))};
    for (long long di : d)
        if (di < 1) return {2, error_report("taftd", "dimensions must be positive")};

    Json j;
    j["command"] = "taftd";
    j["seed"] = seed;
    j["p"] = p;
    j["d"] = d;
    std::vector<long long> c = convolution(d);
    bool criterion = frobenius_criterion(d);
    long long total = predicted_total_dim(d);
    Json table = Json::array();
    std::ostringstream tsv;
    tsv << "k\tc_k\tsoc\tcosoc\tverdict\n";
    for (int k = 0; k < p; ++k) {
        auto pred = soc_cosoc_dims_predicted(d, k);
        Json row;
        row["k"] = k;
        row["c_k"] = c[static_cast<size_t>(k)];
        row["soc"] = pred.first;
        row["cosoc"] = pred.second;
        table.push_back(std::move(row));
        tsv << k << "\t" << c[static_cast<size_t>(k)] << "\t" << pred.first << "\t" << pred.second
            << "\t" << (pred.first == pred.second ? "balanced" : "unbalanced") << "\n";
    }
    j["criterion_table"] = std::move(table);
    j["criterion_table_tsv"] = tsv.str();
    j["predicted_dim"] = total;
    j["frobenius_criterion"] = criterion;
    if (!reconstruct) return {0, std::move(j)};

    try {
        ReconstructedAlgebra R = build(plan(p, d));
        ReconstructionReport rep = analyze(R, seed);
        Json rj;
        rj["dim"] = rep.dim;
        rj["radical_dim"] = rep.radical_dim;
        rj["nilpotency_index"] = rep.nilpotency_index;
        rj["quasi_frobenius"] = rep.quasi_frobenius;
        rj["frobenius"] = rep.frobenius;
        rj["method"] = rep.frobenius_detail.method;
        Json rt = Json::array();
        Json soc_cosoc = Json::array();
        for (const ProjectiveRow& row : rep.table) {
            Json e;
            e["k"] = row.k;
            e["c_k"] = row.c_k;
            e["dim"] = row.dim;
            e["soc"] = row.soc;
            e["cosoc"] = row.cosoc;
            e["dual_projective"] = row.dual_projective;
            rt.push_back(std::move(e));
            soc_cosoc.push_back(Json::array({row.soc, row.cosoc}));
        }
        rj["projectives"] = std::move(rt);
        j["reconstruction"] = std::move(rj);
        j["bundle"] = bundle_to_json(bundle_of(R.H));
        j["projectives"] = Json{{"quasi_frobenius", rep.quasi_frobenius},
                                {"soc_cosoc", std::move(soc_cosoc)}};
        bool agree = rep.predictions_match && rep.frobenius_matches_criterion &&
                     rep.dim == total && rep.quasi_frobenius;
        j["prediction_agreement"] = agree;
        return {agree ? 0 : 1, std::move(j)};
    } catch (const Error& e) {
        return {1, error_report("taftd", e.what())};
    }
}

CommandResult cmd_export_builtin(const std::string& name) {
    try {
        auto dash = name.rfind('-');
        if (dash == std::string::npos) throw Error("unknown builtin \"" + name + "\"");
        std::string kind = name.substr(0, dash);
        int arg = std::atoi(name.substr(dash + 1).c_str());
        AlgebraBundle b;
        if (kind == "taft")
            b = bundle_of(to_hopf_data(build_taft(arg)));
        else if (kind == "group")
            b = bundle_of(group_algebra(arg));
        else if (kind == "pair-groupoid")
            b = bundle_of(pair_groupoid_algebra(arg));
        else
            throw Error("unknown builtin \"" + name + "\"");
        Json j;
        j["command"] = "export";
        j["name"] = name;
        j["bundle"] = bundle_to_json(b);
        return {0, std::move(j)};
    } catch (const Error& e) {
        return {2, error_report("export", e.what())};
    }
}

}  // namespace froblab
