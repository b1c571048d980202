#include "paracert/report.hpp"

#include <stdexcept>

#include "paracert/errors.hpp"
#include "paracert/framing.hpp"

namespace paracert::cli {

namespace {

using nlohmann::json;

json input_echo(const DiagramFile& d) {
    json in = json::object();
    if (d.name) in["name"] = *d.name;
    if (d.comment) in["comment"] = *d.comment;
    if (d.braid) in["braid"] = braids::to_text(*d.braid);
    if (d.framings) in["framings"] = *d.framings;
    if (d.matrix) {
        json rows = json::array();
        for (std::size_t i = 0; i < d.matrix->size(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < d.matrix->size(); ++j)
                row.push_back(d.matrix->at(i, j) ? 1 : 0);
            rows.push_back(std::move(row));
        }
        in["matrix"] = std::move(rows);
    }
    return in;
}

json parity_json(const gf2::LinkingParity& lp) {
    json rows = json::array();
    for (std::size_t i = 0; i < lp.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < lp.size(); ++j)
            row.push_back(lp.at(i, j) ? 1 : 0);
        rows.push_back(std::move(row));
    }
    return rows;
}

json certificate_json(const framing::ParallelisationCertificate& cert) {
    json c;
    json a = json::array();
    for (std::size_t i = 0; i < cert.a.size(); ++i)
        a.push_back(cert.a.get(i) ? 1 : 0);
    c["a"] = std::move(a);
    c["a_inf"] = cert.a_inf;
    json sigma = json::array();
    for (std::size_t i = 0; i < cert.resulting.curve_count(); ++i)
        sigma.push_back(cert.resulting.parity(framing::CurveId::indexed(i)));
    c["curve_parity"] = {
        {"sigma", std::move(sigma)},
        {"sigma_inf",
         cert.resulting.parity(framing::CurveId::infinity())},
    };
    c["valid"] = cert.valid;
    return c;
}

json self_linking_json(const braids::BraidWord& b) {
    const auto lc = braids::closure_components(b);
    json values = json::array();
    json oracle = json::array();
    json odd = json::array();
    bool all_odd = true;
    bool oracle_agrees = true;
    for (std::size_t c = 0; c < lc.count; ++c) {
        const std::int64_t sl = braids::self_linking(b, c);
        const std::int64_t push = braids::push_off_linking(b, c);
        const bool is_odd = ((sl % 2) + 2) % 2 == 1;
        values.push_back(sl);
        oracle.push_back(push);
        odd.push_back(is_odd);
        all_odd = all_odd && is_odd;
        oracle_agrees = oracle_agrees && sl == push;
    }
    return json{
        {"values", std::move(values)}, {"push_off_oracle", std::move(oracle)},
        {"odd", std::move(odd)},       {"all_odd", all_odd},
        {"oracle_agrees", oracle_agrees},
    };
}

json even_surgery_json(const framing::EvenSurgeryReport& r) {
    json comps = json::array();
    for (const auto& c : r.components) {
        comps.push_back(json{
            {"framing", c.framing},
            {"self_linking", c.self_linking},
            {"diff_parity", c.diff_parity},
            {"extends", c.extends},
            {"sl_odd", c.sl_odd},
        });
    }
    return json{
        {"components", std::move(comps)},
        {"all_framings_even", r.all_framings_even},
        {"overall_extends", r.overall},
    };
}

gf2::LinkingParity parity_of(const DiagramFile& d) {
    return d.matrix ? *d.matrix : braids::linking_parity(*d.braid);
}

}  // namespace

Report report_certify(const DiagramFile& d) {
    Report r;
    r.doc["command"] = "certify";
    r.doc["input"] = input_echo(d);

    const gf2::LinkingParity lp = parity_of(d);
    if (d.braid) {
        const auto lk = braids::linking_matrix(*d.braid);
        r.doc["linking"] = {{"matrix", lk}, {"parity", parity_json(lp)}};
        r.doc["components"] = braids::closure_components(*d.braid).count;
        r.doc["self_linking"] = self_linking_json(*d.braid);
        if (d.framings) {
            r.doc["even_surgery"] = even_surgery_json(
                framing::check_even_surgery(
                    braids::make_framed_link(*d.braid, *d.framings)));
        }
    } else {
        r.doc["linking"] = {{"parity", parity_json(lp)}};
        r.doc["components"] = lp.size();
    }

    const auto cert = framing::compute_certificate(lp);
    r.doc["certificate"] = certificate_json(cert);
    r.exit_code = cert.valid ? 0 : 1;
    return r;
}

Report report_sl(const DiagramFile& d) {
    if (!d.braid)
        throw std::invalid_argument(
            "sl requires a braid input (matrix diagrams carry no knots)");
    Report r;
    r.doc["command"] = "sl";
    r.doc["input"] = input_echo(d);
    r.doc["components"] = braids::closure_components(*d.braid).count;
    json sl = self_linking_json(*d.braid);
    const bool ok =
        sl.at("all_odd").get<bool>() && sl.at("oracle_agrees").get<bool>();
    r.doc["self_linking"] = std::move(sl);
    r.exit_code = ok ? 0 : 1;
    return r;
}

Report report_check_even(const DiagramFile& d) {
    if (!d.braid || !d.framings)
        throw std::invalid_argument(
            "check-even requires a braid input with framings");
    Report r;
    r.doc["command"] = "check-even";
    r.doc["input"] = input_echo(d);
    const auto report = framing::check_even_surgery(
        braids::make_framed_link(*d.braid, *d.framings));
    r.doc["even_surgery"] = even_surgery_json(report);
    r.exit_code = report.overall ? 0 : 1;
    return r;
}

Report report_contact_verify(std::size_t samples, std::uint64_t seed) {
    const auto report = contact::verify_frame_properties(samples, seed);
    Report r;
    r.doc["command"] = "contact-verify";
    r.doc["samples"] = report.samples;
    r.doc["seed"] = report.seed;
    json checks = json::object();
    for (const auto& [name, check] : report.checks) {
        checks[name] = {
            {"max_residual", check.max_residual},
            {"tolerance", check.tolerance},
            {"pass", check.pass},
        };
    }
    r.doc["checks"] = std::move(checks);
    r.doc["all_pass"] = report.all_pass;
    r.exit_code = report.all_pass ? 0 : 1;
    return r;
}

}  // namespace paracert::cli
