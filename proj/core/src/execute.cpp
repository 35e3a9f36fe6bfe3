#include "hochkit/execute.hpp"

#include "hochkit/derivlift.hpp"
#include "hochkit/morita.hpp"

#include "json.hpp"

#include <sstream>

namespace hochkit {

namespace {

using Json = nlohmann::ordered_json;

std::string fmt_exponents(const std::vector<int>& e) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << "]";
    return os.str();
}

std::string fmt_coords(const ChainRing& R, const std::vector<Elem>& c) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << R.format(c[i]);
    os << "]";
    return os.str();
}

std::string ring_desc(const ChainRing& R) {
    std::ostringstream os;
    if (R.spec().kind == RingKind::Unramified) {
        os << "unramified p=" << R.p() << " N=" << R.precision();
    } else {
        os << "eisenstein p=" << R.p() << " e=" << R.ram_index() << " N=" << R.precision() << " E=[";
        for (size_t i = 0; i < R.spec().eis_coeffs.size(); ++i)
            os << (i ? "," : "") << R.spec().eis_coeffs[i];
        os << "]";
    }
    return os.str();
}

std::string algebra_desc(const JobSpec& job, const Algebra& a) {
    std::ostringstream os;
    os << job.algebra.preset;
    if (job.algebra.preset == "cyclic_group") os << " order=" << job.algebra.order;
    if (job.algebra.preset == "truncated_polynomial") os << " m=" << job.algebra.m;
    if (job.algebra.preset == "matrix")
        os << " n=" << job.algebra.n << " base=" << job.algebra.base;
    os << " rank=" << a.rank();
    return os.str();
}

// Label a degree-1 class generator by its defining image; truncated
// polynomial derivations sending x to a monomial get the d_i names.
std::string label_generator(const JobSpec& job, const Algebra& abar, const Cohomology& h, size_t idx) {
    if (h.degree != 1 || h.coefficients.rank != abar.rank()) return "g" + std::to_string(idx);
    LinearMap d = derivation_from_cochain(h.basis[idx]);
    if (job.algebra.preset == "truncated_polynomial" && abar.rank() >= 2) {
        auto img = d.apply(abar.basis_vec(1));
        int hits = 0;
        size_t which = 0;
        for (size_t i = 0; i < img.size(); ++i)
            if (img[i].packed != 0) { ++hits; which = i; }
        if (hits == 1 && img[which] == abar.ring().one()) return "d_" + std::to_string(which);
        return "x->" + abar.format_element(img);
    }
    if (job.algebra.preset == "cyclic_group" && abar.rank() >= 2)
        return "y->" + abar.format_element(d.apply(abar.basis_vec(1)));
    return "g" + std::to_string(idx);
}

std::vector<std::string> generator_detail(const Algebra& abar, const Cohomology& h, size_t idx) {
    std::vector<std::string> parts;
    const Cochain& c = h.basis[idx];
    if (h.degree == 0) {
        parts.push_back(abar.format_element(c.v));
        return parts;
    }
    size_t tuples = c.v.size() / c.mrank;
    size_t printed = 0;
    for (size_t t = 0; t < tuples && printed < 16; ++t) {
        auto val = cochain_value(c, t);
        if (vec_is_zero(val)) continue;
        // decode tuple
        std::vector<size_t> T(c.degree);
        size_t rem = t;
        for (int k = c.degree - 1; k >= 0; --k) {
            T[k] = rem % c.algrank;
            rem /= c.algrank;
        }
        std::ostringstream os;
        os << "(";
        for (int k = 0; k < c.degree; ++k) os << (k ? "," : "") << abar.basis_name(T[k]);
        os << ")->" << abar.format_element(val);
        parts.push_back(os.str());
        ++printed;
    }
    if (parts.empty()) parts.push_back("0");
    return parts;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

std::string csv_quote(const std::string& s) {
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

struct Report {
    std::ostringstream text;
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
    Json json;
    int code = 0;
};

std::string render(const JobSpec& job, const ChainRing& R, const Algebra& a, Report& rep) {
    if (job.format == "csv") {
        std::ostringstream os;
        os << join(rep.csv_header, ",") << "\n";
        for (const auto& row : rep.csv_rows) {
            std::vector<std::string> cells;
            for (const auto& c : row) cells.push_back(csv_quote(c));
            os << join(cells, ",") << "\n";
        }
        return os.str();
    }
    if (job.format == "json") {
        Json out;
        out["command"] = job.command;
        out["ring"] = ring_desc(R);
        out["algebra"] = algebra_desc(job, a);
        for (auto& [k, v] : rep.json.items()) out[k] = v;
        return out.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "command=" << job.command << "\n";
    os << "ring=" << ring_desc(R) << "\n";
    os << "algebra=" << algebra_desc(job, a) << "\n";
    os << rep.text.str();
    return os.str();
}

int default_r(const JobSpec& job, const ChainRing& R) {
    if (job.r >= 1) return job.r;
    return R.precision();
}

void run_hh(const JobSpec& job, const ChainRing& R, const Algebra& a, Report& rep) {
    int r = default_r(job, R);
    Algebra abar = a.reduced(r);
    Cohomology h = cohomology(abar, regular_bimodule(abar), job.degree);
    std::vector<std::string> labels;
    for (size_t i = 0; i < h.pres.num_generators(); ++i) labels.push_back(label_generator(job, abar, h, i));
    rep.text << "degree=" << job.degree << " r=" << r << "\n";
    rep.text << "order=" << h.order() << " exponents=" << fmt_exponents(h.pres.exponents)
             << " basis=" << join(labels, ",") << "\n";
    for (size_t i = 0; i < labels.size(); ++i)
        rep.text << "gen " << labels[i] << ": " << join(generator_detail(abar, h, i), ", ") << "\n";
    rep.csv_header = {"degree", "order", "exponents", "basis"};
    rep.csv_rows.push_back({std::to_string(job.degree), std::to_string(h.order()),
                            fmt_exponents(h.pres.exponents), join(labels, ",")});
    rep.json["degree"] = job.degree;
    rep.json["r"] = r;
    rep.json["order"] = h.order();
    rep.json["exponents"] = h.pres.exponents;
    rep.json["basis"] = labels;
}

void run_chain(const JobSpec& job, const ChainRing& R, const Algebra& a, Report& rep) {
    (void)R;
    Algebra abar = a.reduced(job.r);
    Cohomology h = cohomology(abar, regular_bimodule(abar), 1);
    IntegrableChain chain = integrable_chain(a, job.r, job.s_max, h);
    rep.text << "r=" << job.r << " s_max=" << job.s_max << "\n";
    rep.csv_header = {"s", "order", "generators", "coordinates"};
    Json levels = Json::array();
    for (auto& [s, grp] : chain.levels) {
        std::vector<std::string> gens;
        std::vector<std::string> coords;
        for (const auto& g : grp.generators) coords.push_back(fmt_coords(h.pres.ring, g));
        for (const auto& g : grp.generators) {
            Cochain repc = h.representative(g);
            LinearMap d = derivation_from_cochain(repc);
            size_t probe = abar.rank() >= 2 ? 1 : 0;
            std::string lbl = abar.basis_name(probe) + "->" + abar.format_element(d.apply(abar.basis_vec(probe)));
            if (job.algebra.preset == "truncated_polynomial") {
                // reuse the d_i naming when the image is a monomial
                auto img = d.apply(abar.basis_vec(1));
                int hits = 0;
                size_t which = 0;
                for (size_t i = 0; i < img.size(); ++i)
                    if (img[i].packed != 0) { ++hits; which = i; }
                if (hits == 1 && img[which] == abar.ring().one()) lbl = "d_" + std::to_string(which);
            }
            gens.push_back(lbl);
        }
        rep.text << "L_" << s << ": order=" << grp.order() << " generators=[" << join(gens, ";")
                 << "] coords=[" << join(coords, ";") << "]\n";
        rep.csv_rows.push_back({std::to_string(s), std::to_string(grp.order()), join(gens, ";"),
                                join(coords, ";")});
        Json lvl;
        lvl["s"] = s;
        lvl["order"] = grp.order();
        lvl["generators"] = gens;
        lvl["coordinates"] = coords;
        levels.push_back(lvl);
    }
    rep.text << "inclusions=" << (chain.inclusions_ok ? "ok" : "BROKEN") << "\n";
    if (chain.stable_from) rep.text << "stable_from=" << *chain.stable_from << "\n";
    rep.json["r"] = job.r;
    rep.json["s_max"] = job.s_max;
    rep.json["levels"] = levels;
    rep.json["inclusions_ok"] = chain.inclusions_ok;
    if (chain.stable_from) rep.json["stable_from"] = *chain.stable_from;
    if (!chain.inclusions_ok) rep.code = 1;
}

void run_bockstein(const JobSpec& job, const ChainRing& R, const Algebra& a, Report& rep) {
    (void)R;
    int r = job.r;
    Algebra a2r = a.reduced(2 * r);
    Algebra abar = a.reduced(r);
    Bimodule reg = regular_bimodule(abar);
    Cohomology hsrc = cohomology(abar, reg, job.degree);
    Cohomology htgt = cohomology(abar, reg, job.degree + 1);
    rep.text << "degree=" << job.degree << " r=" << r << "\n";
    rep.text << "source order=" << hsrc.order() << " target order=" << htgt.order() << "\n";
    rep.csv_header = {"class", "beta"};
    Json items = Json::array();
    for (size_t i = 0; i < hsrc.basis.size(); ++i) {
        std::string lbl = label_generator(job, abar, hsrc, i);
        auto coords = htgt.coords_of(bockstein_cochain(a2r, r, hsrc.basis[i]));
        std::string cs = fmt_coords(htgt.pres.ring, coords);
        rep.text << "beta(" << lbl << ") = " << cs << "\n";
        rep.csv_rows.push_back({lbl, cs});
        Json it;
        it["class"] = lbl;
        it["beta"] = cs;
        items.push_back(it);
    }
    rep.json["degree"] = job.degree;
    rep.json["r"] = r;
    rep.json["classes"] = items;
}

void run_les(const JobSpec& job, const ChainRing& R, const Algebra& a, Report& rep) {
    (void)R;
    LesReport les = les_exactness_report(a, job.r, 2);
    rep.text << "r=" << job.r << " max_degree=2\n";
    rep.csv_header = {"degree", "position", "order", "exact"};
    Json nodes = Json::array();
    const char* posname[3] = {"sub", "mid", "quot"};
    for (const LesNode& nd : les.nodes) {
        rep.text << "node deg=" << nd.degree << " pos=" << posname[nd.position]
                 << " order=" << nd.order << " exact=" << (nd.exact ? "yes" : "NO") << "\n";
        rep.csv_rows.push_back({std::to_string(nd.degree), posname[nd.position],
                                std::to_string(nd.order), nd.exact ? "yes" : "no"});
        Json n;
        n["degree"] = nd.degree;
        n["position"] = posname[nd.position];
        n["order"] = nd.order;
        n["exact"] = nd.exact;
        nodes.push_back(n);
    }
    rep.text << "verdict=" << (les.all_exact ? "exact" : "FAIL") << "\n";
    rep.json["r"] = job.r;
    rep.json["nodes"] = nodes;
    rep.json["all_exact"] = les.all_exact;
    if (!les.all_exact) rep.code = 1;
}

void run_level(const JobSpec& job, const ChainRing& R, const Algebra& a, Report& rep) {
    (void)R;
    rep.text << "degree=" << job.degree << " r=" << job.r << " s_max=" << job.s_max << "\n";
    rep.csv_header = {"degree", "s", "s_ref", "equal"};
    bool all = true;
    Json rows = Json::array();
    for (int s = job.r; s <= job.s_max; ++s) {
        auto res = level_compare(a, job.r, s, job.s_max, job.degree);
        all = all && res.equal;
        rep.text << "s=" << s << " vs s=" << job.s_max << ": exponents=" << fmt_exponents(res.lhs.exponents)
                 << " equal=" << (res.equal ? "yes" : "NO") << "\n";
        rep.csv_rows.push_back({std::to_string(job.degree), std::to_string(s),
                                std::to_string(job.s_max), res.equal ? "yes" : "no"});
        Json row;
        row["s"] = s;
        row["equal"] = res.equal;
        rows.push_back(row);
    }
    rep.text << "verdict=" << (all ? "equal" : "FAIL") << "\n";
    rep.json["degree"] = job.degree;
    rep.json["r"] = job.r;
    rep.json["rows"] = rows;
    rep.json["all_equal"] = all;
    if (!all) rep.code = 1;
}

void run_pi_shift(const JobSpec& job, const ChainRing& R, const Algebra& a, Report& rep) {
    (void)R;
    PiShiftResult ps = pi_shift_hh1(a, job.r);
    rep.text << "r=" << job.r << "\n";
    rep.text << "source_order=" << ps.source.order() << " target_order=" << ps.target.order()
             << " injective=" << (ps.injective ? "yes" : "no") << "\n";
    for (size_t i = 0; i < ps.map.rows; ++i)
        rep.text << "map g" << i << " -> " << fmt_coords(ps.target.pres.ring, ps.map.row(i)) << "\n";
    rep.csv_header = {"source_order", "target_order", "injective"};
    rep.csv_rows.push_back({std::to_string(ps.source.order()), std::to_string(ps.target.order()),
                            ps.injective ? "yes" : "no"});
    rep.json["r"] = job.r;
    rep.json["source_order"] = ps.source.order();
    rep.json["target_order"] = ps.target.order();
    rep.json["injective"] = ps.injective;
}

void run_morita(const JobSpec& job, const ChainRing& R, const Algebra& a, Report& rep) {
    (void)R;
    MoritaReport mr = morita_invariance_report(a, job.r, job.s_max, job.n);
    rep.text << "r=" << job.r << " s_max=" << job.s_max << " n=" << job.n << "\n";
    rep.text << "transfer=" << (mr.transfer_bijective ? "bijective" : "NOT-BIJECTIVE") << "\n";
    {
        // the class correspondence HH^1(A-bar) -> HH^1(M_n(A-bar))
        MoritaContext ctx = make_morita(a, job.n);
        Algebra abar = a.reduced(job.r);
        Algebra mbar = ctx.matrix.reduced(job.r);
        Cohomology hb = cohomology(abar, regular_bimodule(abar), 1);
        Cohomology hm = cohomology(mbar, regular_bimodule(mbar), 1);
        Mat tm = transfer_class_matrix(ctx, hb, hm);
        for (size_t i = 0; i < tm.rows; ++i)
            rep.text << "transfer g" << i << " -> " << fmt_coords(hm.pres.ring, tm.row(i)) << "\n";
    }
    rep.csv_header = {"s", "base_order", "matrix_order", "match"};
    Json rows = Json::array();
    for (size_t i = 0; i < mr.level_match.size(); ++i) {
        int s = mr.level_match[i].first;
        bool ok = mr.level_match[i].second;
        uint64_t bo = mr.base_chain.levels[i].second.order();
        uint64_t mo = mr.matrix_chain.levels[i].second.order();
        rep.text << "L_" << s << ": base_order=" << bo << " matrix_order=" << mo
                 << " match=" << (ok ? "yes" : "NO") << "\n";
        rep.csv_rows.push_back({std::to_string(s), std::to_string(bo), std::to_string(mo), ok ? "yes" : "no"});
        Json row;
        row["s"] = s;
        row["base_order"] = bo;
        row["matrix_order"] = mo;
        row["match"] = ok;
        rows.push_back(row);
    }
    rep.text << "verdict=" << (mr.all_match ? "match" : "FAIL") << "\n";
    rep.json["r"] = job.r;
    rep.json["s_max"] = job.s_max;
    rep.json["n"] = job.n;
    rep.json["levels"] = rows;
    rep.json["all_match"] = mr.all_match;
    if (!mr.all_match) rep.code = 1;
}

void run_report(const JobSpec& job, const ChainRing& R, const Algebra& a, Report& rep) {
    int r = job.r >= 1 ? job.r : (2 <= R.precision() ? 1 : R.precision());
    JobSpec sub = job;
    sub.r = r;
    rep.text << "r=" << r << "\n";
    for (int n = 0; n <= 2; ++n) {
        rep.text << "== hh degree " << n << "\n";
        JobSpec hj = sub;
        hj.degree = n;
        Report hr;
        run_hh(hj, R, a, hr);
        rep.text << hr.text.str();
    }
    if (2 * r <= R.precision()) {
        rep.text << "== les-check\n";
        Report lr;
        run_les(sub, R, a, lr);
        rep.text << lr.text.str();
        rep.code = std::max(rep.code, lr.code);
    }
    if (r + 1 <= R.precision()) {
        rep.text << "== pi-shift\n";
        Report pr;
        run_pi_shift(sub, R, a, pr);
        rep.text << pr.text.str();
    }
    if (sub.s_max >= 2 * r) {
        rep.text << "== chain\n";
        Report cr;
        run_chain(sub, R, a, cr);
        rep.text << cr.text.str();
        rep.code = std::max(rep.code, cr.code);
    }
    if (!job.ideal.empty()) {
        // Which HH^1 basis derivations map the given two-sided ideal into itself.
        rep.text << "== ideal\n";
        Algebra abar = a.reduced(r);
        if (job.ideal.front().size() != abar.rank())
            fail(Errc::ValidationError, "ideal generator length must equal the algebra rank");
        Mat gens(abar.ring(), job.ideal.size(), abar.rank());
        for (size_t i = 0; i < job.ideal.size(); ++i)
            for (size_t j = 0; j < abar.rank(); ++j)
                gens.at(i, j) = abar.ring().from_int(job.ideal[i][j]);
        Cohomology h = cohomology(abar, regular_bimodule(abar), 1);
        for (size_t i = 0; i < h.basis.size(); ++i) {
            LinearMap d = derivation_from_cochain(h.basis[i]);
            bool pres = preserves_ideal(abar, d, gens);
            rep.text << "gen " << label_generator(job, abar, h, i)
                     << ": preserves=" << (pres ? "yes" : "no") << "\n";
        }
    }
    rep.json["note"] = "report is text-oriented";
}

} // namespace

ExecResult execute(const JobSpec& job) {
    ChainRing R = build_ring(job);
    Algebra a = build_algebra(job, R);
    Report rep;
    if (job.command == "hh") run_hh(job, R, a, rep);
    else if (job.command == "chain") run_chain(job, R, a, rep);
    else if (job.command == "bockstein") run_bockstein(job, R, a, rep);
    else if (job.command == "les-check") run_les(job, R, a, rep);
    else if (job.command == "level-check") run_level(job, R, a, rep);
    else if (job.command == "pi-shift") run_pi_shift(job, R, a, rep);
    else if (job.command == "morita-check") run_morita(job, R, a, rep);
    else if (job.command == "report") run_report(job, R, a, rep);
    else fail(Errc::ValidationError, "unknown command " + job.command);
    return ExecResult{rep.code, render(job, R, a, rep)};
}

ExecResult execute_spec_text(const std::string& spec_text, const std::string& format_override) {
    JobSpec job;
    try {
        job = parse_spec(spec_text);
    } catch (const Error& e) {
        return ExecResult{2, std::string("error: ") + e.what() + "\n"};
    }
    if (!format_override.empty()) job.format = format_override;
    try {
        return execute(job);
    } catch (const Error& e) {
        std::ostringstream os;
        os << "error in command '" << job.command << "' (degree=" << job.degree << " r=" << job.r
           << " s_max=" << job.s_max << " n=" << job.n << "): " << e.what() << "\n";
        return ExecResult{2, os.str()};
    }
}

} // namespace hochkit
