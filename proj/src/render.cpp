#include "hkrays/render.hpp"

#include <sstream>

namespace hkrays::render {

using lattice::type_name;
using lattice::Vec2;

Format parse_format(const std::string& name) {
    if (name == "markdown")
        return Format::markdown;
    if (name == "json")
        return Format::json;
    if (name == "csv")
        return Format::csv;
    throw domain_error("unknown format '" + name +
                       "' (expected markdown, json or csv)");
}

Json json_int(const Int& v) {
    static const Int limit = (Int(1) << 53) - 1;
    if (abs(v) <= limit)
        return Json(v.get_si());
    return Json(v.get_str());
}

std::string class_string(const Vec2& v, const std::string& first,
                         const std::string& second) {
    std::string out;
    if (v.r != 0) {
        if (v.r == -1)
            out += "-";
        else if (v.r != 1)
            out += v.r.get_str();
        out += first;
    }
    if (v.s != 0) {
        if (v.s > 0 && v.r != 0)
            out += "+";
        if (v.s == -1)
            out += "-";
        else if (v.s != 1)
            out += v.s.get_str();
        out += second;
    }
    if (out.empty())
        out = "0";
    return out;
}

std::string hilbert_class(const Vec2& v, bool ascii) {
    return class_string(v, "H", ascii ? "tau" : "τ");
}

std::string fano_class(const Vec2& v, bool ascii) {
    return class_string(v, "g", ascii ? "gamma" : "γ");
}

std::string pell_cell(const std::optional<pell::PellFundamental>& p) {
    if (!p)
        return "";
    return "(" + p->a.get_str() + "," + p->b.get_str() + ")";
}

std::string type_pair_string(const hilbert::HilbertRow& row) {
    std::string s = type_name(row.first);
    if (row.second)
        s += std::string("+") + type_name(*row.second);
    return s;
}

namespace {

std::string join_row(const std::vector<std::string>& cells, const char* sep,
                     bool pad) {
    std::ostringstream os;
    if (pad)
        os << "|";
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (pad)
            os << " " << cells[i] << " |";
        else
            os << (i ? sep : "") << cells[i];
    }
    return os.str();
}

std::string markdown_table(const std::vector<std::string>& header,
                           const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream os;
    os << join_row(header, "", true) << "\n|";
    for (std::size_t i = 0; i < header.size(); ++i)
        os << "---|";
    os << "\n";
    for (const auto& r : rows)
        os << join_row(r, "", true) << "\n";
    return os.str();
}

std::vector<std::string> hilbert_cells(const hilbert::HilbertRow& row,
                                       bool ascii) {
    return {row.e.get_str(), pell_cell(row.pell), type_pair_string(row),
            row.Hprime ? hilbert_class(*row.Hprime, ascii) : "",
            row.tauPrime ? hilbert_class(*row.tauPrime, ascii) : ""};
}

Json vec_json(const Vec2& v) {
    return Json::array({json_int(v.r), json_int(v.s)});
}

Json conic_json(const rays::ConicBundleInvariants& ci) {
    Json j;
    j["type"] = type_name(ci.type);
    j["hs_square"] = json_int(ci.hs_square);
    if (ci.brauer) {
        Json b;
        b["hs_b"] = ci.brauer->hs_b_halves == 0 ? "0" : "1/2";
        b["b_squared"] = ci.brauer->b_sq_halves == 0 ? "0" : "1/2";
        j["brauer"] = b;
    } else {
        j["brauer"] = nullptr;
    }
    j["transcendental"] = ci.tx_relation;
    j["heegner"] = ci.heegner_label;
    return j;
}

} // namespace

std::string hilbert_markdown(const std::vector<hilbert::HilbertRow>& rows,
                             bool ascii) {
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rows)
        cells.push_back(hilbert_cells(r, ascii));
    return markdown_table(
        {"e", "(a,b)", "types", "H'", ascii ? "tau'" : "τ'"}, cells);
}

std::string hilbert_csv(const std::vector<hilbert::HilbertRow>& rows) {
    std::ostringstream os;
    os << "e,a,b,types,Hprime,tauPrime\n";
    for (const auto& r : rows) {
        os << r.e.get_str() << ",";
        if (r.pell)
            os << r.pell->a.get_str() << "," << r.pell->b.get_str();
        else
            os << ",";
        os << "," << type_pair_string(r) << ","
           << (r.Hprime ? hilbert_class(*r.Hprime, true) : "") << ","
           << (r.tauPrime ? hilbert_class(*r.tauPrime, true) : "") << "\n";
    }
    return os.str();
}

Json hilbert_json(const hilbert::HilbertRow& row) {
    Json j;
    j["e"] = json_int(row.e);
    j["d"] = json_int(row.d);
    j["det_abs"] = json_int(row.det_abs);
    if (row.pell) {
        Json p;
        p["a"] = json_int(row.pell->a);
        p["b"] = json_int(row.pell->b);
        j["pell"] = p;
    } else {
        j["pell"] = nullptr;
    }
    Json types = Json::array();
    types.push_back(type_name(row.first));
    if (row.second)
        types.push_back(type_name(*row.second));
    j["types"] = types;
    if (row.Hprime) {
        Json second;
        second["kind"] = "divisorial";
        second["H_prime"] = vec_json(*row.Hprime);
        second["tau_prime"] = vec_json(*row.tauPrime);
        j["second_ray"] = second;
    } else {
        Json second;
        second["kind"] = "lagrangian";
        second["class"] = vec_json(*row.lagrangian);
        j["second_ray"] = second;
    }
    Json walls = Json::array();
    for (const auto& w : row.flopping_walls) {
        Json wj;
        wj["kappa"] = vec_json(w.kappa);
        wj["orthogonal_ray"] = vec_json(w.orthogonal_ray);
        walls.push_back(wj);
    }
    j["flopping_walls"] = walls;
    j["model_count"] = json_int(row.model_count);
    j["fm_partners"] = row.fm_partners ? json_int(*row.fm_partners) : Json(nullptr);
    Json cbs = Json::array();
    for (const auto& ci : row.conic_bundles)
        cbs.push_back(conic_json(ci));
    j["conic_bundles"] = cbs;
    return j;
}

std::string hilbert_detail(const hilbert::HilbertRow& row, bool ascii) {
    std::ostringstream os;
    if (row.lagrangian)
        os << "lagrangian ray: " << hilbert_class(*row.lagrangian, ascii)
           << "\n";
    if (row.flopping_walls.empty()) {
        os << "flopping walls: none\n";
    } else {
        os << "flopping walls:";
        for (const auto& w : row.flopping_walls)
            os << " " << hilbert_class(w.kappa, ascii) << " (orthogonal ray "
               << hilbert_class(w.orthogonal_ray, ascii) << ")";
        os << "\n";
    }
    os << "birational models: " << row.model_count.get_str() << "\n";
    os << "FM partners: "
       << (row.fm_partners ? row.fm_partners->get_str() : "n/a") << "\n";
    return os.str();
}

namespace {

std::vector<std::vector<std::string>> fano_cells(const fano::FanoRow& row,
                                                 bool ascii) {
    const std::string e = row.e.get_str();
    const std::string adm = row.admissibility;
    const std::string m2 = row.has_minus_two ? "Yes" : "No";
    const std::string ab = pell_cell(row.pell);
    std::vector<std::vector<std::string>> out;
    if (row.rays.empty()) {
        out.push_back({e, adm, m2, ab, "None", "None", "None", "None"});
        return out;
    }
    for (const auto& ray : row.rays)
        out.push_back({e, adm, m2, ab, type_name(ray.type),
                       fano_class(ray.H, ascii), fano_class(ray.tau, ascii),
                       ray.scroll_degree.get_str()});
    return out;
}

} // namespace

std::string fano_markdown(const std::vector<fano::FanoRow>& rows, bool ascii) {
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rows)
        for (auto& line : fano_cells(r, ascii))
            cells.push_back(line);
    return markdown_table({"e", "adm", "(-2)-classes", "(a,b)", "types", "H",
                           ascii ? "tau" : "τ",
                           ascii ? "deg(Sigma_f)" : "deg(Σ_f)"},
                          cells);
}

std::string fano_csv(const std::vector<fano::FanoRow>& rows) {
    std::ostringstream os;
    os << "e,adm,minus2,a,b,type,H,tau,deg\n";
    for (const auto& r : rows) {
        const std::string base =
            r.e.get_str() + "," + r.admissibility + "," +
            (r.has_minus_two ? "Yes" : "No") + "," +
            (r.pell ? r.pell->a.get_str() : "") + "," +
            (r.pell ? r.pell->b.get_str() : "");
        if (r.rays.empty()) {
            os << base << ",None,None,None,None\n";
            continue;
        }
        for (const auto& ray : r.rays)
            os << base << "," << type_name(ray.type) << ","
               << fano_class(ray.H, true) << "," << fano_class(ray.tau, true)
               << "," << ray.scroll_degree.get_str() << "\n";
    }
    return os.str();
}

Json fano_json(const fano::FanoRow& row) {
    Json j;
    j["e"] = json_int(row.e);
    j["d"] = json_int(row.d);
    j["admissible"] = row.admissibility;
    j["has_minus_two_class"] = row.has_minus_two;
    if (row.pell) {
        Json p;
        p["a"] = json_int(row.pell->a);
        p["b"] = json_int(row.pell->b);
        j["pell"] = p;
    } else {
        j["pell"] = nullptr;
    }
    Json rays = Json::array();
    for (const auto& ray : row.rays) {
        Json rj;
        rj["type"] = type_name(ray.type);
        rj["H"] = vec_json(ray.H);
        rj["tau"] = vec_json(ray.tau);
        rj["scroll_degree"] = json_int(ray.scroll_degree);
        rays.push_back(rj);
    }
    j["rays"] = rays;
    Json lag = Json::array();
    for (const auto& v : row.lagrangians)
        lag.push_back(vec_json(v));
    j["lagrangian_boundaries"] = lag;
    return j;
}

std::string admissible_markdown(const std::vector<Int>& values) {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i)
        os << (i ? ", " : "") << values[i].get_str();
    os << "\n";
    return os.str();
}

std::string admissible_csv(const std::vector<Int>& values) {
    std::ostringstream os;
    os << "e\n";
    for (const auto& v : values)
        os << v.get_str() << "\n";
    return os.str();
}

Json admissible_json(const std::vector<Int>& values) {
    Json out = Json::array();
    for (const auto& v : values)
        out.push_back(json_int(v));
    return out;
}

} // namespace hkrays::render
