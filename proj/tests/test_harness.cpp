#include "expected_tables.hpp"
#include "fixtures.hpp"

#include "prat/errors.hpp"
#include "prat/harness.hpp"

#include <doctest.h>

#include <cstdlib>
#include <sstream>

using namespace prat;
using namespace prat::testing;

namespace {

std::vector<long> as_longs(const std::vector<Integer>& xs)
{
    std::vector<long> out;
    for (const auto& x : xs)
        out.push_back(x.get_si());
    return out;
}

std::vector<FieldRecord> records_of(const std::vector<PreparedField>& fs)
{
    std::vector<FieldRecord> out;
    for (const auto& f : fs)
        out.push_back(f.record);
    return out;
}

LoadResult read_csv(const std::string& text)
{
    std::istringstream in(text);
    return read_records(in, RecordFormat::Csv, "mem");
}

const char* kHeader = "label,degree,poly,h,unit\n";

}  // namespace

TEST_CASE("split_csv_line")
{
    CHECK(split_csv_line("a,b,,c") == std::vector<std::string>{"a", "b", "", "c"});
    CHECK(split_csv_line("a,\"1,2;3\",b") == std::vector<std::string>{"a", "1,2;3", "b"});
    CHECK(split_csv_line("\"say \"\"hi\"\"\"") == std::vector<std::string>{"say \"hi\""});
    CHECK_THROWS_AS(split_csv_line("a,\"b"), InputError);
}

TEST_CASE("load the bundled examples")
{
    auto ex = load_fields("examples.csv");
    REQUIRE(ex.size() == 2);
    const auto& r = ex[0].record;
    CHECK(r.label == "split-cubic");
    CHECK(r.poly == IntPoly{27, -4, 0, 1});
    CHECK(*r.class_number == 3);
    CHECK(r.unit == std::vector<Integer>{-3280, -3462, -729});
    REQUIRE(r.aux);
    CHECK(r.aux->q == 2);
    CHECK(r.aux->generator_poly == IntPoly{1, 1});
    CHECK(r.aux->power_generator == std::vector<Integer>{-604, 265, -77});
    CHECK(ex[1].record.unit == std::vector<Integer>{-2, -1, 1, 1});
    CHECK(load_fields("table1_cubic.csv").size() == 35);
    CHECK(load_fields("table2_quartic.csv").size() == 12);
}

TEST_CASE("empty input gives no records")
{
    CHECK(read_csv("").fields.empty());
    CHECK(read_csv("# only a comment\n").fields.empty());
    CHECK(read_csv(kHeader).fields.empty());
    std::istringstream js("[]");
    CHECK(read_records(js, RecordFormat::Json).fields.empty());
}

TEST_CASE("malformed rows report their line")
{
    auto expect = [](const std::string& text, const std::string& fragment) {
        try {
            read_csv(text);
            FAIL("no error for: " << text);
        } catch (const InputError& e) {
            CHECK_MESSAGE(std::string(e.what()).find(fragment) != std::string::npos, e.what());
        }
    };
    expect(std::string("# c\n") + kHeader + "a,3,27;-4;0;1,3\n", "mem:3: expected 5 fields");
    expect(std::string(kHeader) + "a,3,27;-4;x;1,3,1;0;0\n", "mem:2: not an integer");
    expect(std::string(kHeader) + "a,4,27;-4;0;1,3,1;0;0\n", "mem:2: degree column");
    expect("label,degree,poly,h,unit,colour\n", "mem:1: unknown column 'colour'");
    expect("label,degree,poly,unit\n", "mem:1: missing column 'h'");
    expect(std::string(kHeader) + "a,3,\"27;-4;0;1,3,1;0;0\n", "mem:2: unterminated quote");
}

TEST_CASE("invalid records are skipped with a diagnostic")
{
    std::string text = std::string(kHeader) +
                       "good,3,27;-4;0;1,3,-3280;-3462;-729\n"
                       "badnorm,3,27;-4;0;1,3,2;0;0\n"
                       "reducible,3,0;-1;0;1,1,1;1;0\n"
                       "good,3,27;-4;0;1,3,-3280;-3462;-729\n";
    auto res = read_csv(text);
    REQUIRE(res.fields.size() == 1);
    REQUIRE(res.skipped.size() == 3);
    CHECK(res.skipped[0].line == 3);
    CHECK(res.skipped[0].label == "badnorm");
    CHECK(res.skipped[0].message.find("norm") != std::string::npos);
    CHECK(res.skipped[1].line == 4);
    CHECK(res.skipped[2].message == "duplicate label");
}

TEST_CASE("CSV and JSON round trips")
{
    std::vector<FieldRecord> all;
    for (const auto* name : {"examples.csv", "table1_cubic.csv", "table2_quartic.csv"})
        for (auto& r : records_of(load_fields(name)))
            all.push_back(r);

    std::ostringstream csv;
    write_records_csv(csv, all);
    std::istringstream csv_in(csv.str());
    auto back = read_records(csv_in, RecordFormat::Csv);
    CHECK(back.skipped.empty());
    CHECK(records_of(back.fields) == all);

    std::ostringstream js;
    write_records_json(js, all);
    std::istringstream js_in(js.str());
    auto back2 = read_records(js_in, RecordFormat::Json);
    CHECK(back2.skipped.empty());
    CHECK(records_of(back2.fields) == all);

    // emitted CSV is itself stable
    std::ostringstream csv2;
    write_records_csv(csv2, records_of(back.fields));
    CHECK(csv2.str() == csv.str());
}

TEST_CASE("JSON diagnostics")
{
    std::istringstream bad("[{\"label\": \"a\"");
    CHECK_THROWS_AS(read_records(bad, RecordFormat::Json), InputError);
    std::istringstream unknown("[{\"label\": \"a\", \"poly\": [1,0,0,1], \"unit\": [1,0,0], \"x\": 1}]");
    try {
        read_records(unknown, RecordFormat::Json, "j");
        FAIL("expected an error");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()) == "j: record 1: unknown key 'x'");
    }
    std::istringstream big("[{\"label\": \"s\", \"poly\": \"27;-4;0;1\", \"h\": 3, "
                           "\"unit\": [\"-3280\", -3462, -729]}]");
    auto res = read_records(big, RecordFormat::Json);
    REQUIRE(res.fields.size() == 1);
    CHECK(res.fields[0].record.unit[0] == -3280);
    CHECK(format_for_path("x/y.json") == RecordFormat::Json);
    CHECK(format_for_path("x/y.csv") == RecordFormat::Csv);
}

TEST_CASE("table reproduction matches the published exceptions")
{
    for (int which = 1; which <= 2; ++which) {
        auto fields = load_fields(which == 1 ? "table1_cubic.csv" : "table2_quartic.csv");
        const auto& expected = which == 1 ? expected_table1() : expected_table2();
        auto rows = reproduce_table(fields, 5, 100);
        REQUIRE(rows.size() == expected.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            CAPTURE(rows[i].label);
            CHECK(rows[i].poly.to_string() == expected[i].poly);
            CHECK(as_longs(rows[i].primes_with(Reason::TorsionNontrivial)) == expected[i].torsion);
            CHECK(as_longs(rows[i].primes_with(Reason::ClassNumberDivisible)) == expected[i].p_divides_h);
            CHECK(as_longs(rows[i].primes_with(VerdictStatus::Undetermined)) == expected[i].p_divides_h);
            CHECK(as_longs(rows[i].primes_with(VerdictStatus::NotApplicable)) == expected[i].not_applicable);
            for (const auto& c : rows[i].cells)
                CHECK_MESSAGE(!c.is_error(), c.error);
        }
    }
}

TEST_CASE("table rendering")
{
    auto fields = load_fields("table2_quartic.csv");
    auto rows = reproduce_table(fields, 5, 100);
    std::string text = render_table_text(rows);
    CHECK(text.find("x^4 + 9") != std::string::npos);
    std::string csv = render_table_csv(rows);
    CHECK(csv.find("T2-02,x^4 + 1,,13;31,13;31,,,") != std::string::npos);
    CHECK(csv.find("T2-01,x^4 - x^3 + x^2 - x + 1,,,,,5,") != std::string::npos);
    for (char c : csv)
        CHECK(static_cast<unsigned char>(c) < 128);

    auto t1 = reproduce_table(load_fields("table1_cubic.csv"), 5, 100);
    std::string csv1 = render_table_csv(t1);
    CHECK(csv1.find("T1-35,x^3 - x^2 + 9*x - 21,7,,,7?,,") != std::string::npos);
    CHECK(render_table_text(t1).find("7?") != std::string::npos);

    // deterministic regardless of thread count
    setenv("PRAT_THREADS", "1", 1);
    std::string serial = render_table_csv(reproduce_table(fields, 5, 100));
    unsetenv("PRAT_THREADS");
    CHECK(serial == csv);
    CHECK(reproduce_table({}, 5, 100).empty());
    CHECK_THROWS_AS(reproduce_table(fields, 3, 100), InputError);
}

TEST_CASE("density scan")
{
    auto ex = load_fields("examples.csv");
    const auto& quartic = by_label(ex, "inert-quartic");
    auto d = density_scan(quartic, 100);
    CHECK(d.per_prime.size() == 23);
    CHECK(d.count >= 21);
    CHECK(d.errors == 0);
    auto small = density_scan(quartic, 5);
    CHECK(small.per_prime.size() == 1);
    CHECK(small.count <= 1);
    int last = -1;
    for (std::uint64_t x : {5, 20, 50, 100, 200}) {
        int c = density_scan(quartic, x).count;
        CHECK(c >= last);
        last = c;
    }
    CHECK_THROWS_AS(density_scan(quartic, 4), InputError);
}

TEST_CASE("worker count honours PRAT_THREADS")
{
    setenv("PRAT_THREADS", "1", 1);
    CHECK(worker_count() == 1);
    setenv("PRAT_THREADS", "junk", 1);
    CHECK(worker_count() >= 1);
    unsetenv("PRAT_THREADS");
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
    CHECK(std::count(hits.begin(), hits.end(), 1) == 1000);
    CHECK_THROWS_AS(parallel_for(10, [](std::size_t i) { if (i == 7) throw InputError("x"); }), InputError);
}
