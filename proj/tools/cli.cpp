#include "cli.hpp"

#include "morikit/chambers.hpp"
#include "morikit/cones.hpp"
#include "morikit/errors.hpp"
#include "morikit/facts.hpp"
#include "morikit/json_io.hpp"
#include "morikit/linear_systems.hpp"
#include "morikit/picard.hpp"
#include "morikit/weights.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

namespace morikit::cli {

namespace {

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream is(text);
    while (std::getline(is, part, ',')) parts.push_back(part);
    if (!text.empty() && text.back() == ',') parts.push_back("");
    return parts;
}

std::vector<Rational> parse_rationals(const std::string& text) {
    std::vector<Rational> out;
    for (const auto& p : split_commas(text)) out.push_back(parse_rational(p));
    if (out.empty()) throw ValidationError("expected a comma-separated vector, got ''");
    return out;
}

std::vector<Integer> parse_integers(const std::string& text) {
    std::vector<Integer> out;
    for (const auto& p : split_commas(text)) {
        const Rational q = parse_rational(p);
        if (q.get_den() != 1) throw ValidationError("expected an integer, got '" + p + "'");
        out.push_back(q.get_num());
    }
    if (out.empty()) throw ValidationError("expected a comma-separated vector, got ''");
    return out;
}

std::vector<int> parse_indices(const std::string& text) {
    std::vector<int> out;
    for (const auto& z : parse_integers(text)) {
        if (z < 1 || z > 1000000) throw ValidationError("index out of range: " + z.get_str());
        out.push_back(static_cast<int>(z.get_si()));
    }
    return out;
}

DivisorClass parse_divisor(int m, const std::string& text) {
    const std::vector<Rational> v = parse_rationals(text);
    if (v.size() < 2) throw ValidationError("divisor needs at least y and one x entry");
    std::vector<Rational> x(v.begin() + 1, v.end());
    const BlowupModel model = make_model(m, static_cast<int>(x.size()));
    return make_divisor(model, v[0], std::move(x));
}

std::string join_pipe(const Json& arr) {
    std::string s;
    for (const auto& e : arr) {
        if (!s.empty()) s += '|';
        if (e.is_string()) s += e.get<std::string>();
        else s += e.dump();
    }
    return s;
}

void emit_csv(const Json& j, std::ostream& out) {
    const std::string cmd = j.at("command").get<std::string>();
    auto kv = [&](const char* key) {
        if (j.contains(key)) {
            const Json& v = j.at(key);
            out << key << ',';
            if (v.is_string()) out << v.get<std::string>();
            else if (v.is_array()) out << join_pipe(v);
            else out << v.dump();
            out << '\n';
        }
    };
    if (cmd == "facts") {
        for (const auto& [key, value] : j.items()) {
            if (key == "schema" || key == "command") continue;
            if (value.is_object()) {
                for (const auto& [k2, v2] : value.items())
                    out << key << '.' << k2 << ',' << v2.get<std::string>() << '\n';
            } else if (value.is_string()) {
                out << key << ',' << value.get<std::string>() << '\n';
            } else {
                out << key << ',' << value.dump() << '\n';
            }
        }
    } else if (cmd == "walls") {
        out << "k,kind,I,normal\n";
        for (const auto& w : j.at("walls"))
            out << w.at("k").get<int>() << ',' << w.at("kind").get<std::string>() << ','
                << join_pipe(w.at("I")) << ',' << join_pipe(w.at("normal")) << '\n';
    } else if (cmd == "flips") {
        out << "stage,center_dim,center_count,inserted_dim\n";
        for (const auto& s : j.at("stages"))
            out << s.at("stage").get<int>() << ',' << s.at("center_dim").get<int>() << ','
                << s.at("center_count").get<std::string>() << ','
                << s.at("inserted_dim").get<int>() << '\n';
    } else if (cmd == "cones") {
        if (j.contains("cone"))
            for (const auto& n : j.at("cone").at("normals")) out << "normal," << join_pipe(n) << '\n';
        if (j.contains("walls"))
            for (const auto& w : j.at("walls")) out << "wall," << join_pipe(w.at("normal")) << '\n';
        if (j.contains("rays")) {
            for (const auto& r : j.at("rays").at("rays")) out << "ray," << join_pipe(r) << '\n';
            for (const auto& l : j.at("rays").at("lineality"))
                out << "lineality," << join_pipe(l) << '\n';
        }
        if (j.contains("subspace"))
            for (const auto& l : j.at("subspace").at("lineality"))
                out << "lineality," << join_pipe(l) << '\n';
    } else if (cmd == "moving-rays") {
        out << "curve,label\n";
        for (const auto& r : j.at("rays"))
            out << join_pipe(r.at("curve")) << ',' << r.at("label").get<std::string>() << '\n';
    } else if (cmd == "ne-rays") {
        out << "count," << j.at("count").get<std::string>() << '\n';
        if (j.contains("rays")) {
            out << "curve,k,kind,I,family\n";
            for (const auto& r : j.at("rays"))
                out << join_pipe(r.at("curve")) << ',' << r.at("k").get<int>() << ','
                    << r.at("kind").get<std::string>() << ',' << join_pipe(r.at("I")) << ','
                    << r.at("family").get<std::string>() << '\n';
        }
    } else if (cmd == "phi") {
        out << "index,weight\n";
        const auto& ws = j.at("weights");
        for (std::size_t i = 0; i < ws.size(); ++i)
            out << (i + 1) << ',' << ws[i].get<std::string>() << '\n';
    } else if (cmd == "locate") {
        for (const char* key : {"in_eff", "in_mov", "in_nef", "in_fano"})
            out << key << ',' << j.at(key).at("side").get<std::string>() << '\n';
        out << "active_walls," << j.at("active_walls").size() << '\n';
        out << "violated_walls," << j.at("violated_walls").size() << '\n';
    } else if (cmd == "hilbert") {
        if (j.contains("system")) {
            out << "n," << j.at("system").at("n").get<int>() << '\n';
            out << "d," << j.at("system").at("d").get<std::string>() << '\n';
            out << "mults," << join_pipe(j.at("system").at("mults")) << '\n';
        }
        kv("polynomial");
        kv("degree");
        kv("N");
        kv("h1");
        out << "s_at_bound," << (j.at("s_at_bound").get<bool>() ? "true" : "false") << '\n';
    } else if (cmd == "kumar") {
        out << "b," << join_pipe(j.at("b")) << '\n';
        out << "n," << j.at("system").at("n").get<int>() << '\n';
        out << "d," << j.at("system").at("d").get<std::string>() << '\n';
        out << "mults," << join_pipe(j.at("system").at("mults")) << '\n';
        out << "clamped," << (j.at("clamped").get<bool>() ? "true" : "false") << '\n';
    } else if (cmd == "cremona") {
        kv("base");
        out << "result," << join_pipe(j.at("result_coords")) << '\n';
        out << "result_degree," << j.at("result_degree").get<std::string>() << '\n';
        out << "result_mults," << join_pipe(j.at("result_mults")) << '\n';
    } else {
        out << j.dump(2) << '\n'; // fallback, not reached by known commands
    }
}

ConeOptions cone_options_from_env() {
    ConeOptions opts;
    if (const char* cap = std::getenv("MORIKIT_RAY_CAP")) {
        const std::string text(cap);
        Integer v;
        try {
            const Rational q = parse_rational(text);
            if (q.get_den() != 1 || q < 1) throw ValidationError("");
            v = q.get_num();
        } catch (const ValidationError&) {
            throw ValidationError("MORIKIT_RAY_CAP must be a positive integer, got '" + text + "'");
        }
        if (!v.fits_ulong_p()) throw ValidationError("MORIKIT_RAY_CAP too large");
        opts.ray_cap = v.get_ui();
    }
    return opts;
}

Json envelope(const char* command) {
    Json j;
    j["schema"] = 1;
    j["command"] = command;
    return j;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    static const std::set<std::string> known = {
        "cones", "locate", "walls",      "flips",   "cremona", "hilbert",
        "kumar", "phi",    "facts",      "moving-rays", "ne-rays"};

    CLI::App app{"exact birational-geometry data for GIT quotients of points on the line"};
    app.require_subcommand(1);

    std::string format = "json";
    int m = 0, g = 0;
    std::string divisor_text, base_text, system_text, b_text;
    std::string which = "eff";
    bool want_rays = false;
    int sigma_odd_g = 0, sigma_even_g = 0;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    CLI::App* cones_cmd = app.add_subcommand("cones", "Divisor cones of X^m_{m+2}");
    cones_cmd->add_option("--m", m, "dimension m")->required();
    cones_cmd->add_option("--which", which, "eff|mov|nef|fano")
        ->check(CLI::IsMember({"eff", "mov", "nef", "fano"}));
    cones_cmd->add_flag("--rays", want_rays, "also enumerate extreme rays");
    add_format(cones_cmd);

    CLI::App* locate_cmd = app.add_subcommand("locate", "Chamber location of a divisor class");
    locate_cmd->add_option("--m", m)->required();
    locate_cmd->add_option("--divisor", divisor_text, "y,x1,...")->required();
    add_format(locate_cmd);

    CLI::App* walls_cmd = app.add_subcommand("walls", "Mori chamber wall arrangement");
    walls_cmd->add_option("--m", m)->required();
    add_format(walls_cmd);

    CLI::App* flips_cmd = app.add_subcommand("flips", "Flip factorization stages");
    flips_cmd->add_option("--g", g)->required();
    add_format(flips_cmd);

    CLI::App* cremona_cmd = app.add_subcommand("cremona", "Cremona push-forward of a class");
    cremona_cmd->add_option("--m", m)->required();
    cremona_cmd->add_option("--divisor", divisor_text, "y,x1,...")->required();
    cremona_cmd->add_option("--base", base_text, "i,j,... (default 1..m+1)");
    add_format(cremona_cmd);

    CLI::App* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert polynomial and degree");
    auto* opt_system = hilbert_cmd->add_option("--system", system_text, "n,d,m1,...");
    auto* opt_sodd = hilbert_cmd->add_option("--sigma-odd", sigma_odd_g, "g for the odd quotient");
    auto* opt_seven = hilbert_cmd->add_option("--sigma-even", sigma_even_g, "g for the even quotient");
    opt_system->excludes(opt_sodd)->excludes(opt_seven);
    opt_sodd->excludes(opt_seven);
    add_format(hilbert_cmd);

    CLI::App* kumar_cmd = app.add_subcommand("kumar", "Kumar linear system of a polarization");
    kumar_cmd->add_option("--b", b_text, "b1,b2,...")->required();
    add_format(kumar_cmd);

    CLI::App* phi_cmd = app.add_subcommand("phi", "Hassett weights of a divisor class");
    phi_cmd->add_option("--m", m)->required();
    phi_cmd->add_option("--divisor", divisor_text, "y,x1,...")->required();
    add_format(phi_cmd);

    CLI::App* facts_cmd = app.add_subcommand("facts", "Numeric fact sheet of the quotient");
    facts_cmd->add_option("--m", m)->required();
    add_format(facts_cmd);

    CLI::App* moving_cmd = app.add_subcommand("moving-rays", "Extremal moving-curve classes");
    moving_cmd->add_option("--g", g)->required();
    add_format(moving_cmd);

    CLI::App* ne_cmd = app.add_subcommand("ne-rays", "Extremal rays of the Mori cone");
    ne_cmd->add_option("--g", g)->required();
    add_format(ne_cmd);

    // Distinguish "unknown subcommand" (64) from ordinary validation errors (2).
    if (!args.empty() && !args[0].empty() && args[0][0] != '-' && !known.count(args[0])) {
        err << "unknown subcommand '" << args[0] << "'\n";
        return kExitUnknownCommand;
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitValidation;
    }

    try {
        const ConeOptions opts = cone_options_from_env();
        Json j;

        if (cones_cmd->parsed()) {
            j = envelope("cones");
            j["m"] = m;
            j["which"] = which;
            if (which == "fano" && m % 2 == 1) {
                Json ws = Json::array();
                for (const Wall& w : fano_locus(m)) ws.push_back(to_json(w));
                j["walls"] = std::move(ws);
                if (want_rays) {
                    // the locus is a subspace: report its basis as lineality
                    std::vector<QVector> normals;
                    for (const Wall& w : fano_locus(m)) {
                        normals.push_back(w.normal);
                        normals.push_back(-w.normal);
                    }
                    j["subspace"] = to_json(h_to_v(make_hcone(m + 3, std::move(normals)), opts));
                }
            } else {
                HCone c;
                if (which == "eff") c = eff_cone(m);
                else if (which == "mov") c = mov_cone(m);
                else if (which == "nef") c = nef_cone(m);
                else c = fano_chamber(m);
                j["cone"] = to_json(c);
                if (want_rays) j["rays"] = to_json(h_to_v(c, opts));
            }
        } else if (locate_cmd->parsed()) {
            const DivisorClass d = parse_divisor(m, divisor_text);
            const ChamberReport report = locate_divisor(d);
            j = envelope("locate");
            j["m"] = m;
            j["divisor"] = to_json(d.coords());
            const Json rj = to_json(report);
            for (const auto& [key, value] : rj.items()) j[key] = value;
        } else if (walls_cmd->parsed()) {
            j = envelope("walls");
            j["m"] = m;
            const auto ws = walls(m);
            j["count"] = ws.size();
            Json arr = Json::array();
            for (const Wall& w : ws) arr.push_back(to_json(w));
            j["walls"] = std::move(arr);
        } else if (flips_cmd->parsed()) {
            j = envelope("flips");
            j["g"] = g;
            Json arr = Json::array();
            for (const FlipStage& st : flip_sequence(g)) {
                Json s;
                s["stage"] = st.stage;
                s["center_dim"] = st.center_dim;
                s["center_count"] = to_string(st.center_count);
                s["inserted_dim"] = st.inserted_dim;
                arr.push_back(std::move(s));
            }
            j["stages"] = std::move(arr);
        } else if (cremona_cmd->parsed()) {
            const DivisorClass d = parse_divisor(m, divisor_text);
            const std::vector<int> base =
                base_text.empty() ? default_cremona_base(d.model) : parse_indices(base_text);
            const DivisorClass image = cremona_pushforward(d, base);
            j = envelope("cremona");
            j["m"] = m;
            j["base"] = base;
            j["input"] = to_json(d);
            j["result"] = to_json(image);
            j["result_coords"] = to_json(image.coords());
            j["result_degree"] = to_string(image.y);
            Json mults = Json::array();
            for (const Rational& xi : image.x) mults.push_back(to_string(-xi));
            j["result_mults"] = std::move(mults);
        } else if (hilbert_cmd->parsed()) {
            j = envelope("hilbert");
            HilbertData h;
            if (*opt_system) {
                const std::vector<Integer> v = parse_integers(system_text);
                if (v.size() < 2) throw ValidationError("--system needs at least n,d");
                if (v[0] < 1 || v[0] > 64) throw ValidationError("ambient dimension out of range");
                const LinearSystem sys = make_system(
                    static_cast<int>(v[0].get_si()), v[1],
                    std::vector<Integer>(v.begin() + 2, v.end()));
                j["system"] = to_json(sys);
                h = hilbert(sys);
            } else if (*opt_sodd) {
                j["g"] = sigma_odd_g;
                j["system"] = to_json(sigma_system(sigma_odd_g));
                h = hilbert_sigma_odd(sigma_odd_g);
            } else if (*opt_seven) {
                j["g"] = sigma_even_g;
                j["system"] = to_json(mu_system(sigma_even_g));
                h = hilbert_sigma_even(sigma_even_g);
            } else {
                throw ValidationError("hilbert needs one of --system, --sigma-odd, --sigma-even");
            }
            const Json hj = to_json(h);
            for (const auto& [key, value] : hj.items()) j[key] = value;
        } else if (kumar_cmd->parsed()) {
            const std::vector<Integer> b = parse_integers(b_text);
            const KumarSystem k = kumar_system(b);
            j = envelope("kumar");
            Json barr = Json::array();
            for (const Integer& bi : b) barr.push_back(to_string(bi));
            j["b"] = std::move(barr);
            j["system"] = to_json(k.system);
            j["clamped"] = k.clamped;
        } else if (phi_cmd->parsed()) {
            const DivisorClass d = parse_divisor(m, divisor_text);
            j = envelope("phi");
            j["m"] = m;
            j["divisor"] = to_json(d.coords());
            j["weights"] = to_json(phi(d));
        } else if (facts_cmd->parsed()) {
            j = envelope("facts");
            const Json fj = to_json(facts(m));
            for (const auto& [key, value] : fj.items()) j[key] = value;
        } else if (moving_cmd->parsed()) {
            const auto rays = moving_curve_rays(g, opts);
            j = envelope("moving-rays");
            j["g"] = g;
            j["count"] = rays.size();
            Json arr = Json::array();
            for (const MovingRay& r : rays) {
                Json e;
                e["curve"] = to_json(r.curve);
                e["label"] = r.label;
                arr.push_back(std::move(e));
            }
            j["rays"] = std::move(arr);
        } else if (ne_cmd->parsed()) {
            const NeExtremalRays ne = ne_extremal_rays(g, opts);
            j = envelope("ne-rays");
            j["g"] = g;
            j["count"] = to_string(ne.count);
            if (!ne.rays.empty()) {
                Json arr = Json::array();
                for (const NeRay& r : ne.rays) {
                    Json e;
                    e["curve"] = to_json(r.curve);
                    e["k"] = r.wall.k;
                    e["kind"] = r.wall.kind == WallKind::A ? "A" : "B";
                    e["I"] = r.wall.I;
                    e["family"] = std::string(1, r.family);
                    arr.push_back(std::move(e));
                }
                j["rays"] = std::move(arr);
            }
        }

        if (format == "csv") emit_csv(j, out);
        else out << j.dump(2) << '\n';
        return kExitOk;
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << '\n';
        return kExitResourceCap;
    } catch (const ValidationError& e) {
        err << "invalid input: " << e.what() << '\n';
        return kExitValidation;
    }
}

} // namespace morikit::cli
