#include "cik/records.hpp"

#include <json.hpp>

#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cik {

const char kCsvHeader[] = "quantity,j,k,value_exact,value_float,method";

std::string float_17g(const Rational& r) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", r.to_double());
    return buf;
}

void write_csv(std::ostream& os, std::span<const OutputRecord> records) {
    os << kCsvHeader << '\n';
    for (const auto& rec : records)
        os << rec.quantity << ',' << rec.j << ',' << rec.k << ',' << rec.value.str() << ','
           << float_17g(rec.value) << ',' << rec.method << '\n';
}

namespace {

std::vector<std::string> split_fields(std::string_view line) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            out.emplace_back(line.substr(start));
            return out;
        }
        out.emplace_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

}  // namespace

std::vector<OutputRecord> parse_csv(std::string_view text) {
    std::vector<OutputRecord> out;
    size_t pos = 0;
    bool saw_header = false;
    while (pos < text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() : eol + 1;
        if (line.empty()) continue;
        if (!saw_header) {
            if (line != kCsvHeader)
                throw std::invalid_argument("parse_csv: missing header");
            saw_header = true;
            continue;
        }
        auto f = split_fields(line);
        if (f.size() != 6) throw std::invalid_argument("parse_csv: expected 6 fields");
        OutputRecord rec;
        rec.quantity = f[0];
        rec.j = std::stoi(f[1]);
        rec.k = std::stoi(f[2]);
        rec.value = Rational::from_string(f[3]);
        rec.method = f[5];
        out.push_back(std::move(rec));
    }
    if (!saw_header) throw std::invalid_argument("parse_csv: empty input");
    return out;
}

void write_json(std::ostream& os, std::span<const OutputRecord> records) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& rec : records) {
        arr.push_back({{"quantity", rec.quantity},
                       {"j", rec.j},
                       {"k", rec.k},
                       {"value_exact", rec.value.str()},
                       {"value_float", float_17g(rec.value)},
                       {"method", rec.method}});
    }
    os << arr.dump(2) << '\n';
}

const Rational& GoldenTable::at(int j, int k) const {
    if (j < j_lo || j > j_hi || k < k_lo || k > k_hi)
        throw std::out_of_range("GoldenTable::at");
    return cells[static_cast<size_t>(j - j_lo) * (k_hi - k_lo + 1) + (k - k_lo)];
}

bool GoldenTable::contains(int j_lo_q, int j_hi_q, int k_lo_q, int k_hi_q) const {
    return j_lo_q >= j_lo && j_hi_q <= j_hi && k_lo_q >= k_lo && k_hi_q <= k_hi;
}

namespace {

GoldenTable parse_golden(int j_lo, int j_hi, int k_lo, int k_hi, const char* text) {
    GoldenTable t{j_lo, j_hi, k_lo, k_hi, {}};
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) t.cells.push_back(Rational::from_string(tok));
    const size_t expect = static_cast<size_t>(j_hi - j_lo + 1) * (k_hi - k_lo + 1);
    if (t.cells.size() != expect)
        throw std::logic_error("golden table: bad cell count");
    return t;
}

// Values of G_j^(k)(0), rows j = 1..9, columns k = 0..9.
const char kGoldenG[] = R"(
1 1/2 1/6 0 -1/30 0 1/42 0 -1/30 0
0 1 1 1/2 0 -1/6 0 1/6 0 -3/10
0 0 2 3 2 0 -1 0 4/3 0
0 0 0 6 12 10 0 -7 0 12
0 0 0 0 24 60 60 0 -56 0
0 0 0 0 0 120 360 420 0 -504
0 0 0 0 0 0 720 2520 3360 0
0 0 0 0 0 0 0 5040 20160 30240
0 0 0 0 0 0 0 0 40320 181440
)";

// Values of gamma(j,k), rows j = 1..9, columns k = 0..7.
const char kGoldenGamma[] = R"(
1/2 1/6 1/24 1/120 1/720 1/5040 1/40320 1/362880
1 1 1/2 13/72 19/360 19/1440 11/3780 349/604800
3 5 4 13/6 73/80 77/240 11/112 271/10080
12 28 31 68/3 151/12 103/18 563/252 7789/10080
60 180 255 707/3 1957/12 365/4 2731/63 22783/1260
360 1320 2280 2551 4237/2 5639/4 3159/4 485809/1260
2520 10920 22260 29260 28378 65734/3 42451/3 712363/90
20160 100800 236880 357840 397152 349224 255543 161154
181440 1028160 2736720 4672080 5841360 5764752 4715343 3310319
)";

// Values of C(j,k), rows j = 1..8, columns k = 0..9.
const char kGoldenC[] = R"(
0 0 1/2 2 11/2 13 57/2 60 247/2 251
0 0 0 1 8 40 485/3 581 1946 6238
0 0 0 0 3 40 315 1925 10143 48636
0 0 0 0 0 12 240 2730 23408 169092
0 0 0 0 0 0 60 1680 26040 297696
0 0 0 0 0 0 0 360 13440 272160
0 0 0 0 0 0 0 0 2520 120960
0 0 0 0 0 0 0 0 0 20160
)";

}  // namespace

const GoldenTable& golden_G() {
    static const GoldenTable t = parse_golden(1, 9, 0, 9, kGoldenG);
    return t;
}

const GoldenTable& golden_gamma() {
    static const GoldenTable t = parse_golden(1, 9, 0, 7, kGoldenGamma);
    return t;
}

const GoldenTable& golden_C() {
    static const GoldenTable t = parse_golden(1, 8, 0, 9, kGoldenC);
    return t;
}

}  // namespace cik
