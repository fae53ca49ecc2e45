// Command-line front end: spectra of the square-lattice magnetic Schrodinger
// operator at rational flux, exact Chambers polynomials, certified band
// intervals, and exact Landau-level expansions.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "maglat/chambers.hpp"
#include "maglat/harper.hpp"
#include "maglat/landau.hpp"
#include "maglat/polynomial.hpp"
#include "maglat/embedding.hpp"
#include "maglat/rational.hpp"

using json = nlohmann::json;
using namespace maglat;

namespace {

void emit(const json& j, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(path);
        if (!out) throw CLI::RuntimeError("cannot open output file: " + path, 1);
        out << j.dump(2) << "\n";
    }
}

json band_json(const Band& b) {
    return json{{"lo", b.lo}, {"hi", b.hi}, {"width", b.width()}};
}

json certified_band_json(const CertifiedBand& b) {
    auto edge = [](const IsolatedRoot& r) {
        return json{{"value", r.midpoint()},
                    {"enclosure_lo", to_string(r.lo)},
                    {"enclosure_hi", to_string(r.hi)},
                    {"multiplicity", r.multiplicity}};
    };
    return json{{"lo", edge(b.lo)}, {"hi", edge(b.hi)}, {"touches_below", b.touches_below}};
}

json coefficients_json(const std::vector<Rational>& coeffs) {
    json a = json::array();
    for (const auto& c : coeffs) a.push_back(to_string(c));
    return a;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"square-lattice magnetic Schrodinger spectra at rational flux"};
    app.require_subcommand(1);

    long p = 1, q = 5;
    std::string tau_str = "1";
    std::string json_path;

    // ---- bands ----
    auto* bands_cmd = app.add_subcommand("bands", "band intervals at flux p/q");
    bands_cmd->add_option("-p,--p", p, "flux numerator")->required();
    bands_cmd->add_option("-q,--q", q, "flux denominator")->required();
    bands_cmd->add_option("--tau", tau_str, "anisotropy t_y/t_x as a rational, e.g. 3/4");
    bool certified = false;
    bands_cmd->add_flag("--certified", certified,
                        "also compute exact band edges with rational enclosures");
    bands_cmd->add_option("--json", json_path, "write JSON to file ('-' for stdout)")
        ->expected(0, 1)->default_str("-");

    // ---- chambers ----
    auto* chambers_cmd = app.add_subcommand("chambers", "exact Chambers polynomial at p/q");
    chambers_cmd->add_option("-p,--p", p)->required();
    chambers_cmd->add_option("-q,--q", q)->required();
    chambers_cmd->add_option("--tau", tau_str, "anisotropy as a rational");
    bool symbolic = false;
    chambers_cmd->add_flag("--symbolic-tau", symbolic, "keep the anisotropy symbolic");
    chambers_cmd->add_option("--json", json_path)->expected(0, 1)->default_str("-");

    // ---- butterfly ----
    auto* butterfly_cmd = app.add_subcommand("butterfly", "bands for every p/q with q <= qmax");
    unsigned qmax = 20;
    butterfly_cmd->add_option("--qmax", qmax, "largest denominator")->required();
    butterfly_cmd->add_option("--tau", tau_str);
    std::string csv_path = "-";
    butterfly_cmd->add_option("--csv", csv_path, "CSV output file ('-' for stdout)");

    // ---- landau ----
    auto* landau_cmd = app.add_subcommand("landau", "exact Landau-level series in the flux");
    unsigned level = 0, order = 8;
    landau_cmd->add_option("--level", level, "Landau index n");
    landau_cmd->add_option("--order", order, "series order in B");
    std::string u_str = "1";
    landau_cmd->add_option("--u", u_str, "sqrt of the anisotropy, rational");
    bool nu_fit = false;
    landau_cmd->add_flag("--nu-polynomials", nu_fit,
                         "print coefficients as polynomials in nu = 2n+1");
    landau_cmd->add_option("--json", json_path)->expected(0, 1)->default_str("-");

    // ---- check ----
    auto* check_cmd = app.add_subcommand("check", "series vs exact lattice spectrum at p/q");
    check_cmd->add_option("-p,--p", p)->required();
    check_cmd->add_option("-q,--q", q)->required();
    check_cmd->add_option("--order", order);
    check_cmd->add_option("--level", level);
    check_cmd->add_option("--u", u_str);
    check_cmd->add_option("--json", json_path)->expected(0, 1)->default_str("-");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*bands_cmd) {
            Rational tau = rat_from_string(tau_str);
            Flux f(p, q);
            auto nb = numeric_bands(f, to_double(tau));
            json out{{"p", f.p}, {"q", f.q}, {"tau", to_string(tau)},
                     {"field", f.field()}, {"bands", json::array()}};
            for (const auto& b : nb) out["bands"].push_back(band_json(b));
            if (certified) {
                ChambersData c = chambers_polynomial(f, tau);
                out["certified_bands"] = json::array();
                for (const auto& b : chambers_bands(c))
                    out["certified_bands"].push_back(certified_band_json(b));
            }
            if (bands_cmd->count("--json")) {
                emit(out, json_path);
            } else {
                std::printf("flux %u/%u  tau=%s  B=%.6f\n", f.p, f.q, tau_str.c_str(), f.field());
                for (unsigned j = 0; j < nb.size(); ++j)
                    std::printf("band %2u  [%+.12f, %+.12f]  width %.3e\n", j, nb[j].lo,
                                nb[j].hi, nb[j].width());
                if (certified) {
                    std::printf("certified edges (exact rational enclosures):\n");
                    for (const auto& b : out["certified_bands"])
                        std::printf("  [%+.15f, %+.15f]%s\n", b["lo"]["value"].get<double>(),
                                    b["hi"]["value"].get<double>(),
                                    b["touches_below"].get<bool>() ? "  (touches previous)" : "");
                }
            }
        } else if (*chambers_cmd) {
            Flux f(p, q);
            if (f.q > 120)
                throw CLI::RuntimeError("q > 120 not supported for the exact route", 1);
            if (symbolic) {
                if (f.q > 40)
                    throw CLI::RuntimeError("q > 40 not supported with --symbolic-tau", 1);
                Polynomial d = chambers_polynomial_symbolic_tau(f);
                if (chambers_cmd->count("--json")) {
                    json out{{"p", f.p}, {"q", f.q}, {"polynomial", d.to_string({"E", "t"})}};
                    emit(out, json_path);
                } else {
                    std::printf("Delta(E, t) = %s\n", d.to_string({"E", "t"}).c_str());
                }
            } else {
                Rational tau = rat_from_string(tau_str);
                ChambersData c = chambers_polynomial(f, tau);
                json out{{"p", f.p}, {"q", f.q}, {"tau", to_string(tau)},
                         {"edge_bound", to_string(c.edge_bound)},
                         {"coefficient_field",
                          c.rational() ? "Q" : "Q(zeta_" + std::to_string(f.q) + ")+"},
                         {"certified_bands", json::array()}};
                json exact = json::array(), decimal = json::array();
                for (unsigned k = 0; k <= f.q; ++k) {
                    Polynomial ck = c.coefficient(k);
                    exact.push_back(c.rational() ? to_string(ck.constant_value())
                                                 : ck.to_string({"E", "z"}));
                    decimal.push_back(cyclotomic_embedding(ck, f.q, 1));
                }
                out["coefficients_ascending"] = exact;
                out["coefficients_decimal"] = decimal;
                if (c.rational())
                    out["polynomial"] = c.rational_polynomial().to_string("E");
                UniPoly norm = chambers_norm(c);
                out["galois_norm"] = norm.to_string("E");
                for (const auto& b : chambers_bands(c))
                    out["certified_bands"].push_back(certified_band_json(b));
                if (chambers_cmd->count("--json")) {
                    emit(out, json_path);
                } else {
                    if (c.rational()) {
                        std::printf("Delta(E) = %s\n", c.rational_polynomial().to_string("E").c_str());
                    } else {
                        std::printf("Delta(E) has coefficients in Q(zeta_%u)+ (z = exp(2 pi i/%u)):\n",
                                    f.q, f.q);
                        for (unsigned k = 0; k <= f.q; ++k)
                            std::printf("  [E^%u]  %-40s  = %+.12f\n", k,
                                        c.coefficient(k).to_string({"E", "z"}).c_str(),
                                        decimal[k].get<double>());
                        std::printf("Galois norm over numerator classes:\n  %s\n",
                                    norm.to_string("E").c_str());
                    }
                    std::printf("spectrum: |Delta(E)| <= %s\n", to_string(c.edge_bound).c_str());
                    for (const auto& b : out["certified_bands"])
                        std::printf("band [%+.12f, %+.12f]%s\n",
                                    b["lo"]["value"].get<double>(),
                                    b["hi"]["value"].get<double>(),
                                    b["touches_below"].get<bool>() ? "  (touches previous)" : "");
                }
            }
        } else if (*butterfly_cmd) {
            Rational tau = rat_from_string(tau_str);
            auto pts = butterfly(qmax, to_double(tau));
            std::ostream* os = &std::cout;
            std::ofstream file;
            if (csv_path != "-") {
                file.open(csv_path);
                if (!file) throw CLI::RuntimeError("cannot open output file: " + csv_path, 1);
                os = &file;
            }
            *os << "p,q,phi,band,lo,hi\n";
            char line[160];
            for (const auto& pt : pts)
                for (unsigned j = 0; j < pt.bands.size(); ++j) {
                    std::snprintf(line, sizeof line, "%u,%u,%.10f,%u,%.12f,%.12f\n", pt.p, pt.q,
                                  static_cast<double>(pt.p) / pt.q, j, pt.bands[j].lo,
                                  pt.bands[j].hi);
                    *os << line;
                }
        } else if (*landau_cmd) {
            Rational u = rat_from_string(u_str);
            LandauSeries s = landau_level_series(level, order, u);
            json out{{"level", s.level}, {"order", order}, {"u", to_string(u)},
                     {"coefficients", coefficients_json(s.energy.coefficients())}};
            json dec = json::array();
            for (const auto& c : s.energy.coefficients()) dec.push_back(to_double(c));
            out["coefficients_decimal"] = dec;
            if (nu_fit) {
                auto polys = landau_coefficients_in_nu(order, u);
                json np = json::array();
                for (const auto& c : polys) np.push_back(c.to_string("nu"));
                out["nu_polynomials"] = np;
            }
            if (landau_cmd->count("--json")) {
                emit(out, json_path);
            } else {
                std::printf("E_%u(B) = sum_m c_m B^m, u=%s\n", level, u_str.c_str());
                for (unsigned m = 0; m <= order; ++m)
                    std::printf("  c_%-2u = %-24s = %+.15g\n", m,
                                to_string(s.energy[m]).c_str(), to_double(s.energy[m]));
                if (nu_fit)
                    for (const auto& c : out["nu_polynomials"])
                        std::printf("  %s\n", c.get<std::string>().c_str());
            }
        } else if (*check_cmd) {
            Rational u = rat_from_string(u_str);
            Flux f(p, q);
            if (level >= f.q)
                throw CLI::RuntimeError(
                    "level must be below q (only q Bloch bands exist at flux p/q)", 1);
            double field = f.field();
            LandauSeries s = landau_level_series(level, order, u);
            double series_val = s.evaluate(field);
            double tau = to_double(u * u);
            Eigen::VectorXd spec_lo = bloch_spectrum(f, 0.0, 0.0, tau);
            Eigen::VectorXd spec_hi =
                bloch_spectrum(f, std::numbers::pi / f.q, std::numbers::pi / f.q, tau);
            double lat_lo = std::min(spec_lo[level], spec_hi[level]);
            double lat_hi = std::max(spec_lo[level], spec_hi[level]);
            double mid = 0.5 * (lat_lo + lat_hi);
            json out{{"p", f.p}, {"q", f.q}, {"field", field}, {"level", level},
                     {"order", order}, {"series", series_val},
                     {"band_lo", lat_lo}, {"band_hi", lat_hi},
                     {"abs_error_to_band_center", std::abs(series_val - mid)},
                     {"band_width", lat_hi - lat_lo}};
            if (check_cmd->count("--json")) {
                emit(out, json_path);
            } else {
                std::printf("B = %.8f  level %u  order %u\n", field, level, order);
                std::printf("series   %.15f\n", series_val);
                std::printf("lattice  [%.15f, %.15f]\n", lat_lo, lat_hi);
                std::printf("|series - center| = %.3e   band width = %.3e\n",
                            std::abs(series_val - mid), lat_hi - lat_lo);
            }
        }
    } catch (const CLI::RuntimeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.get_exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
