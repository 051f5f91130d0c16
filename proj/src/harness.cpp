#include "prat/harness.hpp"

#include "prat/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace prat {

namespace {

using nlohmann::json;

const std::vector<std::string> kColumns = {"label",         "degree",        "poly",        "h",
                                           "unit",          "unit_den",      "torsion_order", "basis",
                                           "aux_q",         "aux_gen_poly",  "aux_power_gen", "torsion_gen",
                                           "torsion_gen_den"};
const std::set<std::string> kRequired = {"label", "degree", "poly", "h", "unit"};

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        out.push_back(item);
    if (!s.empty() && s.back() == sep)
        out.push_back("");
    return out;
}

std::vector<Integer> parse_integers(const std::string& s)
{
    std::vector<Integer> out;
    for (const auto& item : split(s, ';'))
        out.push_back(parse_integer(item));
    return out;
}

int parse_small(const std::string& s, const std::string& what)
{
    Integer v = parse_integer(s);
    if (!v.fits_sint_p())
        throw InputError(what + " out of range");
    return static_cast<int>(v.get_si());
}

RatMatrix parse_basis(const std::string& s)
{
    RatMatrix m;
    for (const auto& row : split(s, ';')) {
        std::vector<Rational> r;
        for (const auto& item : split(row, ','))
            r.push_back(parse_rational(item));
        m.push_back(std::move(r));
    }
    return m;
}

std::string format_basis(const RatMatrix& m)
{
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i)
            out += ';';
        for (std::size_t j = 0; j < m[i].size(); ++j) {
            if (j)
                out += ',';
            out += m[i][j].get_str();
        }
    }
    return out;
}

void check_degree(const FieldRecord& r, int degree)
{
    if (r.poly.degree() != degree)
        throw InputError("degree column says " + std::to_string(degree) + " but poly has degree " +
                         std::to_string(r.poly.degree()));
}

FieldRecord record_from_csv(const std::map<std::string, std::string>& row)
{
    auto get = [&](const std::string& key) {
        auto it = row.find(key);
        return it == row.end() ? std::string() : trim(it->second);
    };
    FieldRecord r;
    r.label = get("label");
    if (r.label.empty())
        throw InputError("empty label");
    r.poly = parse_poly(get("poly"));
    check_degree(r, parse_small(get("degree"), "degree"));
    if (!get("h").empty())
        r.class_number = parse_integer(get("h"));
    r.unit = parse_integers(get("unit"));
    if (!get("unit_den").empty())
        r.unit_den = parse_integer(get("unit_den"));
    if (!get("torsion_order").empty())
        r.torsion_order = parse_small(get("torsion_order"), "torsion_order");
    if (!get("basis").empty())
        r.basis = parse_basis(get("basis"));
    const std::string q = get("aux_q"), gp = get("aux_gen_poly"), pg = get("aux_power_gen");
    if (!q.empty() || !gp.empty() || !pg.empty()) {
        if (q.empty() || gp.empty() || pg.empty())
            throw InputError("aux_q, aux_gen_poly and aux_power_gen must be given together");
        r.aux = AuxIdealData{parse_integer(q), parse_poly(gp), parse_integers(pg)};
    }
    if (!get("torsion_gen").empty())
        r.torsion_gen = parse_integers(get("torsion_gen"));
    if (!get("torsion_gen_den").empty())
        r.torsion_gen_den = parse_integer(get("torsion_gen_den"));
    return r;
}

Integer json_integer(const json& v, const std::string& what)
{
    if (v.is_number_integer())
        return Integer(v.dump());
    if (v.is_string())
        return parse_integer(v.get<std::string>());
    throw InputError(what + " must be an integer or a decimal string");
}

std::vector<Integer> json_integers(const json& v, const std::string& what)
{
    if (v.is_string())
        return parse_integers(v.get<std::string>());
    if (!v.is_array())
        throw InputError(what + " must be an array");
    std::vector<Integer> out;
    for (const auto& x : v)
        out.push_back(json_integer(x, what));
    return out;
}

FieldRecord record_from_json(const json& o)
{
    if (!o.is_object())
        throw InputError("record must be an object");
    static const std::set<std::string> known = {"label", "degree", "poly", "h", "unit", "unit_den",
                                                "torsion_order", "basis", "aux", "torsion_gen",
                                                "torsion_gen_den"};
    for (const auto& [key, _] : o.items()) {
        if (!known.count(key))
            throw InputError("unknown key '" + key + "'");
    }
    FieldRecord r;
    if (!o.contains("label") || !o["label"].is_string())
        throw InputError("label missing");
    r.label = o["label"].get<std::string>();
    if (!o.contains("poly") || !o.contains("unit"))
        throw InputError("poly and unit are required");
    r.poly = IntPoly(json_integers(o["poly"], "poly"));
    if (o.contains("degree"))
        check_degree(r, static_cast<int>(json_integer(o["degree"], "degree").get_si()));
    if (o.contains("h") && !o["h"].is_null())
        r.class_number = json_integer(o["h"], "h");
    r.unit = json_integers(o["unit"], "unit");
    if (o.contains("unit_den"))
        r.unit_den = json_integer(o["unit_den"], "unit_den");
    if (o.contains("torsion_order"))
        r.torsion_order = static_cast<int>(json_integer(o["torsion_order"], "torsion_order").get_si());
    if (o.contains("basis") && !o["basis"].is_null()) {
        RatMatrix m;
        for (const auto& row : o["basis"]) {
            std::vector<Rational> rr;
            for (const auto& x : row)
                rr.push_back(parse_rational(x.is_string() ? x.get<std::string>() : x.dump()));
            m.push_back(std::move(rr));
        }
        r.basis = std::move(m);
    }
    if (o.contains("aux") && !o["aux"].is_null()) {
        const json& a = o["aux"];
        if (!a.contains("q") || !a.contains("gen_poly") || !a.contains("power_gen"))
            throw InputError("aux needs q, gen_poly and power_gen");
        r.aux = AuxIdealData{json_integer(a["q"], "aux.q"), IntPoly(json_integers(a["gen_poly"], "aux.gen_poly")),
                             json_integers(a["power_gen"], "aux.power_gen")};
    }
    if (o.contains("torsion_gen") && !o["torsion_gen"].is_null())
        r.torsion_gen = json_integers(o["torsion_gen"], "torsion_gen");
    if (o.contains("torsion_gen_den"))
        r.torsion_gen_den = json_integer(o["torsion_gen_den"], "torsion_gen_den");
    return r;
}

json integers_to_json(const std::vector<Integer>& xs)
{
    json a = json::array();
    for (const auto& x : xs) {
        if (x.fits_slong_p())
            a.push_back(x.get_si());
        else
            a.push_back(x.get_str());
    }
    return a;
}

void admit(LoadResult& out, std::set<std::string>& labels, FieldRecord record, int line)
{
    if (!labels.insert(record.label).second) {
        out.skipped.push_back({line, record.label, "duplicate label"});
        return;
    }
    try {
        out.fields.push_back(prepare(record));
    } catch (const InputError& e) {
        out.skipped.push_back({line, record.label, e.what()});
    }
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string join_primes(const std::vector<Integer>& ps, const std::string& sep, const std::string& suffix = "")
{
    std::string out;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i)
            out += sep;
        out += ps[i].get_str() + suffix;
    }
    return out;
}

TableCell evaluate_cell(const PreparedField& F, const Integer& p)
{
    TableCell cell;
    cell.p = p;
    try {
        Verdict v = verdict(F, p);
        cell.status = v.status;
        cell.reasons = v.reasons;
    } catch (const std::exception& e) {
        cell.error = e.what();
    }
    return cell;
}

}  // namespace

std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    if (quoted)
        throw InputError("unterminated quote");
    out.push_back(cur);
    return out;
}

LoadResult read_records(std::istream& in, RecordFormat format, const std::string& source)
{
    LoadResult out;
    std::set<std::string> labels;
    if (format == RecordFormat::Json) {
        json doc;
        try {
            doc = json::parse(in);
        } catch (const json::parse_error& e) {
            throw InputError(source + ": byte " + std::to_string(e.byte) + ": malformed JSON");
        }
        if (doc.is_object() && doc.contains("records"))
            doc = doc["records"];
        if (!doc.is_array())
            throw InputError(source + ": expected an array of records");
        int pos = 0;
        for (const auto& item : doc) {
            ++pos;
            FieldRecord r;
            try {
                r = record_from_json(item);
            } catch (const InputError& e) {
                throw InputError(source + ": record " + std::to_string(pos) + ": " + e.what());
            }
            admit(out, labels, std::move(r), pos);
        }
        return out;
    }

    std::string line;
    int lineno = 0;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        auto where = [&] { return source + ":" + std::to_string(lineno) + ": "; };
        std::vector<std::string> fields;
        try {
            fields = split_csv_line(line);
        } catch (const InputError& e) {
            throw InputError(where() + e.what());
        }
        if (header.empty()) {
            for (auto& f : fields) {
                f = trim(f);
                if (std::find(kColumns.begin(), kColumns.end(), f) == kColumns.end())
                    throw InputError(where() + "unknown column '" + f + "'");
            }
            for (const auto& req : kRequired) {
                if (std::find(fields.begin(), fields.end(), req) == fields.end())
                    throw InputError(where() + "missing column '" + req + "'");
            }
            header = fields;
            continue;
        }
        if (fields.size() != header.size())
            throw InputError(where() + "expected " + std::to_string(header.size()) + " fields, found " +
                             std::to_string(fields.size()));
        std::map<std::string, std::string> row;
        for (std::size_t i = 0; i < header.size(); ++i)
            row[header[i]] = fields[i];
        FieldRecord r;
        try {
            r = record_from_csv(row);
        } catch (const InputError& e) {
            throw InputError(where() + e.what());
        }
        admit(out, labels, std::move(r), lineno);
    }
    return out;
}

LoadResult load_records(const std::string& path, RecordFormat format)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    return read_records(in, format, path);
}

RecordFormat format_for_path(const std::string& path)
{
    auto dot = path.rfind('.');
    if (dot != std::string::npos && path.substr(dot) == ".json")
        return RecordFormat::Json;
    return RecordFormat::Csv;
}

void write_records_csv(std::ostream& out, const std::vector<FieldRecord>& records)
{
    for (std::size_t i = 0; i < kColumns.size(); ++i)
        out << (i ? "," : "") << kColumns[i];
    out << '\n';
    for (const auto& r : records) {
        std::vector<std::string> f = {r.label,
                                      std::to_string(r.poly.degree()),
                                      format_coeffs(r.poly.coeffs()),
                                      r.class_number ? r.class_number->get_str() : "",
                                      format_coeffs(r.unit),
                                      r.unit_den.get_str(),
                                      std::to_string(r.torsion_order),
                                      r.basis ? format_basis(*r.basis) : "",
                                      r.aux ? r.aux->q.get_str() : "",
                                      r.aux ? format_coeffs(r.aux->generator_poly.coeffs()) : "",
                                      r.aux ? format_coeffs(r.aux->power_generator) : "",
                                      r.torsion_gen ? format_coeffs(*r.torsion_gen) : "",
                                      r.torsion_gen ? r.torsion_gen_den.get_str() : ""};
        for (std::size_t i = 0; i < f.size(); ++i)
            out << (i ? "," : "") << csv_escape(f[i]);
        out << '\n';
    }
}

void write_records_json(std::ostream& out, const std::vector<FieldRecord>& records)
{
    json doc = json::array();
    for (const auto& r : records) {
        json o;
        o["label"] = r.label;
        o["degree"] = r.poly.degree();
        o["poly"] = integers_to_json(r.poly.coeffs());
        o["h"] = r.class_number ? json(r.class_number->get_str()) : json(nullptr);
        o["unit"] = integers_to_json(r.unit);
        o["unit_den"] = r.unit_den.get_str();
        o["torsion_order"] = r.torsion_order;
        if (r.basis) {
            json b = json::array();
            for (const auto& row : *r.basis) {
                json jr = json::array();
                for (const auto& x : row)
                    jr.push_back(x.get_str());
                b.push_back(jr);
            }
            o["basis"] = b;
        }
        if (r.aux)
            o["aux"] = {{"q", r.aux->q.get_str()},
                        {"gen_poly", integers_to_json(r.aux->generator_poly.coeffs())},
                        {"power_gen", integers_to_json(r.aux->power_generator)}};
        if (r.torsion_gen) {
            o["torsion_gen"] = integers_to_json(*r.torsion_gen);
            o["torsion_gen_den"] = r.torsion_gen_den.get_str();
        }
        doc.push_back(o);
    }
    out << doc.dump(2) << '\n';
}

// ---------------------------------------------------------------- tables

bool TableCell::has(Reason r) const { return std::find(reasons.begin(), reasons.end(), r) != reasons.end(); }

std::vector<Integer> TableRow::primes_with(Reason r) const
{
    std::vector<Integer> out;
    for (const auto& c : cells) {
        if (!c.is_error() && c.has(r))
            out.push_back(c.p);
    }
    return out;
}

std::vector<Integer> TableRow::primes_with(VerdictStatus s) const
{
    std::vector<Integer> out;
    for (const auto& c : cells) {
        if (!c.is_error() && c.status == s)
            out.push_back(c.p);
    }
    return out;
}

bool TableRow::exceptional() const
{
    return std::any_of(cells.begin(), cells.end(),
                       [](const TableCell& c) { return c.is_error() || c.status != VerdictStatus::PRational; });
}

std::vector<TableRow> reproduce_table(const std::vector<PreparedField>& fields, std::uint64_t pmin,
                                      std::uint64_t pmax)
{
    if (fields.empty())
        return {};
    if (pmin < 5 || pmin > pmax)
        throw InputError("table: need 5 <= pmin <= pmax");
    const auto primes = primes_between(pmin, pmax);
    std::vector<TableRow> rows(fields.size());
    for (std::size_t i = 0; i < fields.size(); ++i) {
        rows[i].label = fields[i].record.label;
        rows[i].poly = fields[i].record.poly;
        rows[i].cells.resize(primes.size());
    }
    parallel_for(fields.size() * primes.size(), [&](std::size_t k) {
        const std::size_t i = k / primes.size(), j = k % primes.size();
        rows[i].cells[j] = evaluate_cell(fields[i], Integer(primes[j]));
    });
    return rows;
}

std::string render_table_text(const std::vector<TableRow>& rows)
{
    std::vector<std::vector<std::string>> lines = {{"label", "f(x)", "p|h", "tor != 1", "not p-rational", "n/a"}};
    int quiet = 0;
    std::vector<std::string> errors;
    for (const auto& r : rows) {
        for (const auto& c : r.cells) {
            if (c.is_error())
                errors.push_back(r.label + " at p = " + c.p.get_str() + ": " + c.error);
        }
        if (!r.exceptional()) {
            ++quiet;
            continue;
        }
        auto ph = r.primes_with(Reason::ClassNumberDivisible);
        auto tor = r.primes_with(Reason::TorsionNontrivial);
        std::string notrat = join_primes(r.primes_with(VerdictStatus::NotPRational), ",");
        std::string undet = join_primes(r.primes_with(VerdictStatus::Undetermined), ",", "?");
        if (!notrat.empty() && !undet.empty())
            notrat += ",";
        notrat += undet;
        auto na = r.primes_with(VerdictStatus::NotApplicable);
        lines.push_back({r.label, r.poly.to_string(), ph.empty() ? "-" : join_primes(ph, ","),
                         tor.empty() ? "-" : join_primes(tor, ","), notrat.empty() ? "-" : notrat,
                         na.empty() ? "-" : join_primes(na, ",")});
    }
    std::vector<std::size_t> width(lines[0].size(), 0);
    for (const auto& l : lines)
        for (std::size_t i = 0; i < l.size(); ++i)
            width[i] = std::max(width[i], l[i].size());
    std::ostringstream os;
    for (const auto& l : lines) {
        for (std::size_t i = 0; i < l.size(); ++i) {
            os << l[i];
            if (i + 1 < l.size())
                os << std::string(width[i] - l[i].size() + 2, ' ');
        }
        os << '\n';
    }
    if (quiet > 0)
        os << quiet << (quiet == 1 ? " further field" : " further fields") << ": every cell p-rational\n";
    for (const auto& e : errors)
        os << "error: " << e << '\n';
    return os.str();
}

std::string render_table_csv(const std::vector<TableRow>& rows)
{
    std::ostringstream os;
    os << "label,poly,p_divides_h,torsion_nontrivial,not_p_rational,undetermined,not_applicable,errors\n";
    for (const auto& r : rows) {
        std::vector<Integer> errs;
        for (const auto& c : r.cells) {
            if (c.is_error())
                errs.push_back(c.p);
        }
        std::vector<std::string> f = {r.label,
                                      r.poly.to_string(),
                                      join_primes(r.primes_with(Reason::ClassNumberDivisible), ";"),
                                      join_primes(r.primes_with(Reason::TorsionNontrivial), ";"),
                                      join_primes(r.primes_with(VerdictStatus::NotPRational), ";"),
                                      join_primes(r.primes_with(VerdictStatus::Undetermined), ";", "?"),
                                      join_primes(r.primes_with(VerdictStatus::NotApplicable), ";"),
                                      join_primes(errs, ";")};
        for (std::size_t i = 0; i < f.size(); ++i)
            os << (i ? "," : "") << csv_escape(f[i]);
        os << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------- density

DensityResult density_scan(const PreparedField& field, std::uint64_t xmax)
{
    if (xmax < 5)
        throw InputError("scan: xmax must be at least 5");
    const auto primes = primes_between(5, xmax);
    DensityResult out;
    out.per_prime.resize(primes.size());
    parallel_for(primes.size(), [&](std::size_t i) { out.per_prime[i] = evaluate_cell(field, Integer(primes[i])); });
    for (const auto& c : out.per_prime) {
        if (c.is_error())
            ++out.errors;
        else if (c.status == VerdictStatus::PRational)
            ++out.count;
        else if (c.status == VerdictStatus::Undetermined)
            ++out.undetermined;
        else if (c.status == VerdictStatus::NotApplicable)
            ++out.not_applicable;
    }
    out.ratio_to_log_x = out.count / std::log(static_cast<double>(xmax));
    return out;
}

// ---------------------------------------------------------------- parallelism

unsigned worker_count()
{
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* cap = std::getenv("PRAT_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(cap, &end, 10);
        if (end != cap && *end == '\0' && v >= 1)
            n = std::min<unsigned>(n, static_cast<unsigned>(v));
    }
    return n;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn)
{
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

}  // namespace prat
