#include "hkrays/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "hkrays/render.hpp"

namespace hkrays::cli {

using render::Format;

namespace {

Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw domain_error("not an integer: '" + s + "'");
    }
}

// "A:B" inclusive
std::pair<Int, Int> parse_range(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw domain_error("range must be A:B, got '" + s + "'");
    return {parse_int(s.substr(0, colon)), parse_int(s.substr(colon + 1))};
}

std::vector<Int> parse_list(const std::string& s) {
    std::vector<Int> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto comma = s.find(',', pos);
        if (comma == std::string::npos)
            comma = s.size();
        out.push_back(parse_int(s.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

struct TableArgs {
    std::string kind;
    std::string range;
    std::string list;
    std::string format = "markdown";
    bool ascii = false;
};

std::vector<Int> table_members(const TableArgs& t, bool fano_kind) {
    if (!t.range.empty() && !t.list.empty())
        throw domain_error("--range and --list are mutually exclusive");
    std::vector<Int> es;
    if (!t.list.empty()) {
        es = parse_list(t.list);
    } else if (!t.range.empty()) {
        auto [lo, hi] = parse_range(t.range);
        for (Int e = lo; e <= hi; ++e) {
            if (fmod(e, 2) != 0)
                continue;
            if (fano_kind && (e <= 6 || (fmod(e, 6) != 0 && fmod(e, 6) != 2)))
                continue;
            es.push_back(e);
        }
    } else {
        throw domain_error("table requires --range or --list");
    }
    return es;
}

void print_hilbert(const std::vector<hilbert::HilbertRow>& rows, Format fmt,
                   bool ascii, bool detail, std::ostream& out) {
    switch (fmt) {
    case Format::markdown:
        out << render::hilbert_markdown(rows, ascii);
        if (detail && rows.size() == 1)
            out << render::hilbert_detail(rows.front(), ascii);
        break;
    case Format::csv:
        out << render::hilbert_csv(rows);
        break;
    case Format::json: {
        if (rows.size() == 1 && detail) {
            out << render::hilbert_json(rows.front()).dump(2) << "\n";
        } else {
            render::Json arr = render::Json::array();
            for (const auto& r : rows)
                arr.push_back(render::hilbert_json(r));
            out << arr.dump(2) << "\n";
        }
        break;
    }
    }
}

void print_fano(const std::vector<fano::FanoRow>& rows, Format fmt, bool ascii,
                bool single, std::ostream& out) {
    switch (fmt) {
    case Format::markdown:
        out << render::fano_markdown(rows, ascii);
        break;
    case Format::csv:
        out << render::fano_csv(rows);
        break;
    case Format::json: {
        if (rows.size() == 1 && single) {
            out << render::fano_json(rows.front()).dump(2) << "\n";
        } else {
            render::Json arr = render::Json::array();
            for (const auto& r : rows)
                arr.push_back(render::fano_json(r));
            out << arr.dump(2) << "\n";
        }
        break;
    }
    }
}

int run_checked(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"hkrays: extremal rays of the movable cone of Hyper-Kaehler "
                 "fourfolds of K3^[2]-type with Picard rank two.\n"
                 "Environment: HKRAYS_MAX_ORBIT caps unit-orbit expansion "
                 "(default 1000000; exceeding it is exit status 2)."};
    app.require_subcommand(1);

    std::string e_str, format = "markdown";
    bool ascii = false;

    auto* h = app.add_subcommand(
        "hilbert", "Extremal rays of the Hilbert square of a degree-e K3 "
                   "surface of Picard rank one");
    h->add_option("--e", e_str, "even degree e of the K3 surface")->required();
    h->add_option("--format", format, "markdown|json|csv");
    h->add_flag("--ascii", ascii, "spell tau/gamma in ASCII");

    auto* f = app.add_subcommand(
        "fano", "Extremal rays of the Fano variety of lines of a cubic "
                "fourfold with rank-two cycle lattice of discriminant e");
    f->add_option("--e", e_str, "discriminant e > 6, e = 0 or 2 mod 6")
        ->required();
    f->add_option("--format", format, "markdown|json|csv");
    f->add_flag("--ascii", ascii, "spell tau/gamma in ASCII");

    TableArgs table;
    auto* t = app.add_subcommand("table", "Batch rows over a range or list");
    t->add_option("kind", table.kind, "hilbert or fano")->required();
    t->add_option("--range", table.range, "inclusive range A:B");
    t->add_option("--list", table.list, "comma-separated e values");
    t->add_option("--format", table.format, "markdown|json|csv");
    t->add_flag("--ascii", table.ascii, "spell tau/gamma in ASCII");

    std::string variant = "star";
    std::string max_str;
    bool no_domain_filter = false;
    auto* adm = app.add_subcommand(
        "admissible", "Even e whose half satisfies the admissibility "
                      "condition (**) or (**)'");
    adm->add_option("--max", max_str, "upper bound (inclusive)")->required();
    adm->add_option("--variant", variant, "star | starprime")
        ->check(CLI::IsMember({"star", "starprime"}));
    adm->add_flag("--no-domain-filter", no_domain_filter,
                  "report the raw predicate for every even e >= 2 instead of "
                  "restricting to the Fano domain e > 6, e = 0,2 mod 6");
    adm->add_option("--format", format, "markdown|json|csv");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    if (h->parsed()) {
        print_hilbert({hilbert::analyze_hilbert_square(parse_int(e_str))},
                      render::parse_format(format), ascii, true, out);
        return 0;
    }
    if (f->parsed()) {
        print_fano({fano::analyze_fano(parse_int(e_str))},
                   render::parse_format(format), ascii, true, out);
        return 0;
    }
    if (t->parsed()) {
        const Format fmt = render::parse_format(table.format);
        if (table.kind == "hilbert") {
            std::vector<hilbert::HilbertRow> rows;
            for (const Int& e : table_members(table, false))
                rows.push_back(hilbert::analyze_hilbert_square(e));
            print_hilbert(rows, fmt, table.ascii, false, out);
        } else if (table.kind == "fano") {
            std::vector<fano::FanoRow> rows;
            for (const Int& e : table_members(table, true))
                rows.push_back(fano::analyze_fano(e));
            print_fano(rows, fmt, table.ascii, false, out);
        } else {
            throw domain_error("table kind must be hilbert or fano");
        }
        return 0;
    }
    if (adm->parsed()) {
        const Int max = parse_int(max_str);
        if (max < 2)
            throw domain_error("admissible: --max must be at least 2");
        const bool star = variant == "star";
        std::vector<Int> values;
        for (Int e = 2; e <= max; e += 2) {
            if (!no_domain_filter &&
                (e <= 6 || (fmod(e, 6) != 0 && fmod(e, 6) != 2)))
                continue;
            if (star ? fano::admissible_star(e)
                     : fano::admissible_star_prime(e))
                values.push_back(e);
        }
        switch (render::parse_format(format)) {
        case Format::markdown:
            out << render::admissible_markdown(values);
            break;
        case Format::csv:
            out << render::admissible_csv(values);
            break;
        case Format::json:
            out << render::admissible_json(values).dump(2) << "\n";
            break;
        }
        return 0;
    }
    err << "no subcommand given\n";
    return 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    try {
        return run_checked(args, out, err);
    } catch (const consistency_error& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace hkrays::cli
