#include "planar/io.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "planar/errors.hpp"

namespace planar {

namespace {

bool blank_or_comment(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

[[noreturn]] void fail_at(const std::string& path, std::size_t lineno, const std::string& what) {
    throw UsageError(path + ":" + std::to_string(lineno) + ": " + what);
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(std::move(t));
    return toks;
}

Rational field(const std::string& path, std::size_t lineno, const std::string& tok) {
    try {
        return parse_rational(tok);
    } catch (const UsageError& e) {
        fail_at(path, lineno, e.what());
    }
}

} // namespace

NumberSet read_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open set file " + path);

    std::vector<PlanarNumber> elems;
    std::optional<System> sys;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        std::string text = line;
        if (auto pos = text.find('#'); pos != std::string::npos) text.resize(pos);
        PlanarNumber x = zero(System::Dual);
        try {
            x = parse_planar(text);
        } catch (const UsageError& e) {
            fail_at(path, lineno, e.what());
        }
        if (sys && x.system != *sys) fail_at(path, lineno, "mixed systems in one set file");
        sys = x.system;
        elems.push_back(std::move(x));
    }
    if (!sys) throw UsageError("set file " + path + " has no elements");
    return NumberSet(*sys, std::move(elems));
}

void write_set_file(const std::string& path, const NumberSet& a, const std::string& comment) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write set file " + path);
    if (!comment.empty()) out << "# " << comment << "\n";
    for (const PlanarNumber& x : a.elements()) out << to_string(x) << "\n";
    if (!out) throw UsageError("write failed for set file " + path);
}

std::vector<Line2> read_line_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open line file " + path);

    std::optional<System> sys;
    std::vector<Line2> lines;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        std::vector<std::string> toks = tokens_of(line);
        if (toks[0] == "system") {
            if (toks.size() != 2) fail_at(path, lineno, "system directive needs one name");
            if (sys) fail_at(path, lineno, "repeated system directive");
            sys = parse_system(toks[1]);
            continue;
        }
        if (!sys) fail_at(path, lineno, "line rows need a leading `system dual|double` directive");

        auto planar_at = [&](std::size_t i) {
            return PlanarNumber{*sys, field(path, lineno, toks[i]), field(path, lineno, toks[i + 1])};
        };
        if (toks[0] == "slope" && toks.size() == 5) {
            lines.push_back(Line2::slope_form(planar_at(1), planar_at(3)));
        } else if (toks[0] == "vert" && toks.size() == 3) {
            lines.push_back(Line2::vertical_form(planar_at(1)));
        } else if (toks[0] == "gen" && toks.size() == 7) {
            lines.push_back(Line2::general_form(planar_at(1), planar_at(3), planar_at(5)));
        } else {
            fail_at(path, lineno, "expected `slope a a b b`, `vert b b`, or `gen a a b b c c`");
        }
    }
    if (!sys) throw UsageError("line file " + path + " has no system directive");
    return lines;
}

void write_line_file(const std::string& path, const std::vector<Line2>& lines) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write line file " + path);
    for (std::size_t i = 0; i < lines.size(); ++i)
        if (lines[i].system() != lines[0].system())
            throw UsageError("mixed-system line list cannot be written to one file");
    if (!lines.empty())
        out << "system " << (lines[0].system() == System::Dual ? "dual" : "double") << "\n";
    for (const Line2& l : lines) {
        switch (l.form()) {
            case LineForm::Slope:
                out << "slope " << l.a().re.str() << " " << l.a().im.str() << " " << l.b().re.str()
                    << " " << l.b().im.str() << "\n";
                break;
            case LineForm::Vertical:
                out << "vert " << l.b().re.str() << " " << l.b().im.str() << "\n";
                break;
            case LineForm::General:
                out << "gen " << l.a().re.str() << " " << l.a().im.str() << " " << l.b().re.str()
                    << " " << l.b().im.str() << " " << l.c().re.str() << " " << l.c().im.str()
                    << "\n";
                break;
        }
    }
    if (!out) throw UsageError("write failed for line file " + path);
}

namespace {

nlohmann::json rational_json(const Rational& r) { return r.str(); }

nlohmann::json pair_json(const std::pair<Rational, Rational>& p) {
    return nlohmann::json::array({rational_json(p.first), rational_json(p.second)});
}

nlohmann::json line4_json(const Line4& l) {
    nlohmann::json base = nlohmann::json::array();
    nlohmann::json dir = nlohmann::json::array();
    for (const Rational& v : l.base) base.push_back(rational_json(v));
    for (const Rational& v : l.dir) dir.push_back(rational_json(v));
    return {{"base", base}, {"dir", dir}};
}

} // namespace

nlohmann::json family_report_json(const std::vector<Line2>& lines) {
    std::vector<std::string> warnings;
    std::vector<LineFamily> fams = detect_families(lines, 2, &warnings);

    nlohmann::json out;
    out["schema_version"] = kSchemaVersion;
    out["line_count"] = lines.size();
    out["family_count"] = fams.size();
    out["warnings"] = warnings;
    nlohmann::json arr = nlohmann::json::array();
    for (const LineFamily& f : fams) {
        nlohmann::json jf;
        jf["system"] = f.system == System::Dual ? "dual" : "double";
        jf["members"] = f.member_line_ids;
        jf["intersection"] = line4_json(f.intersection);
        jf["constant_offset"] = f.constant_offset;
        if (f.real_line) jf["real_line"] = pair_json(*f.real_line);
        if (f.special_point) jf["special_point"] = pair_json(*f.special_point);
        if (f.sign) jf["sign"] = family_sign_name(*f.sign);
        if (f.line_parameter) jf["line_parameter"] = pair_json(*f.line_parameter);
        if (f.point_parameter) jf["point_parameter"] = pair_json(*f.point_parameter);
        if (f.m) jf["m"] = rational_json(*f.m);
        if (f.m_prime) jf["m_prime"] = rational_json(*f.m_prime);
        arr.push_back(std::move(jf));
    }
    out["families"] = std::move(arr);
    return out;
}

} // namespace planar
