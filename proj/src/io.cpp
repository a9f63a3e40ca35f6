/*
   Copyright 2026 The rankstair authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "rankstair/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rankstair {

namespace {

std::string expect_key(std::istringstream& ss, const std::string& key) {
    std::string tok;
    if (!(ss >> tok)) throw std::runtime_error("RMX1: missing " + key);
    if (tok.rfind(key + "=", 0) != 0)
        throw std::runtime_error("RMX1: expected " + key + "=..., got " + tok);
    return tok.substr(key.size() + 1);
}

std::uint64_t to_u64(const std::string& s) {
    std::size_t pos = 0;
    std::uint64_t v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::runtime_error("bad integer: " + s);
    return v;
}

}  // namespace

std::string format_poly(const std::vector<fq_t>& poly) {
    std::string out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(poly[i]);
    }
    return out;
}

std::vector<fq_t> parse_poly(const std::string& s) {
    std::vector<fq_t> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.push_back(fq_t(to_u64(cur)));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(fq_t(to_u64(cur)));
    return out;
}

std::string format_element(const FieldTower& T, const fq_t* coeffs) {
    std::string out;
    for (unsigned u = 0; u < T.m(); ++u) {
        if (u) out += ':';
        out += std::to_string(coeffs[u]);
    }
    return out;
}

static void parse_element(const std::string& tok, unsigned m, fq_t* out) {
    unsigned u = 0;
    std::string cur;
    for (char ch : tok) {
        if (ch == ':') {
            if (u >= m) throw std::runtime_error("entry has too many coordinates");
            out[u++] = fq_t(to_u64(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (u >= m) throw std::runtime_error("entry has too many coordinates");
    out[u++] = fq_t(to_u64(cur));
    if (u != m) throw std::runtime_error("entry has too few coordinates");
}

static void write_rmx_header(std::ostream& os, unsigned p, unsigned s, unsigned m,
                             std::size_t rows, std::size_t cols,
                             const std::vector<fq_t>& basepoly,
                             const std::vector<fq_t>& extpoly) {
    os << "RMX1 p=" << p << " s=" << s << " m=" << m << " rows=" << rows
       << " cols=" << cols << " basepoly=" << format_poly(basepoly)
       << " extpoly=" << format_poly(extpoly) << "\n";
}

void write_ext_matrix(std::ostream& os, const FieldTower& T, const ExtMatrix& M) {
    if (M.m() != T.m()) throw std::invalid_argument("matrix/tower m mismatch");
    write_rmx_header(os, T.base().p(), T.base().s(), T.m(), M.rows(), M.cols(),
                     T.base().base_poly(), T.ext_poly());
    for (std::size_t r = 0; r < M.rows(); ++r) {
        for (std::size_t c = 0; c < M.cols(); ++c) {
            if (c) os << ' ';
            os << format_element(T, M.entry(r, c));
        }
        os << "\n";
    }
}

void write_base_matrix(std::ostream& os, const SmallField& F, const BaseMatrix& M) {
    write_rmx_header(os, F.p(), F.s(), 1, M.rows(), M.cols(), F.base_poly(),
                     {0, 1});
    for (std::size_t r = 0; r < M.rows(); ++r) {
        for (std::size_t c = 0; c < M.cols(); ++c) {
            if (c) os << ' ';
            os << M.get(r, c);
        }
        os << "\n";
    }
}

namespace {

struct RmxHeader {
    unsigned p, s, m;
    std::size_t rows, cols;
    std::vector<fq_t> basepoly, extpoly;
};

RmxHeader read_rmx_header(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("RMX1: empty input");
    std::istringstream ss(line);
    std::string magic;
    ss >> magic;
    if (magic != "RMX1") throw std::runtime_error("RMX1: bad magic " + magic);
    RmxHeader h;
    h.p = unsigned(to_u64(expect_key(ss, "p")));
    h.s = unsigned(to_u64(expect_key(ss, "s")));
    h.m = unsigned(to_u64(expect_key(ss, "m")));
    h.rows = std::size_t(to_u64(expect_key(ss, "rows")));
    h.cols = std::size_t(to_u64(expect_key(ss, "cols")));
    h.basepoly = parse_poly(expect_key(ss, "basepoly"));
    h.extpoly = parse_poly(expect_key(ss, "extpoly"));
    return h;
}

}  // namespace

std::pair<FieldTower, ExtMatrix> read_ext_matrix(std::istream& is) {
    RmxHeader h = read_rmx_header(is);
    FieldTower T(SmallField(h.p, h.s, h.basepoly), h.m, h.extpoly);
    ExtMatrix M(h.rows, h.cols, h.m);
    std::string tok;
    for (std::size_t r = 0; r < h.rows; ++r)
        for (std::size_t c = 0; c < h.cols; ++c) {
            if (!(is >> tok)) throw std::runtime_error("RMX1: truncated body");
            parse_element(tok, h.m, M.entry(r, c));
            for (unsigned u = 0; u < h.m; ++u)
                if (M.entry(r, c)[u] >= T.base().q())
                    throw std::runtime_error("RMX1: coordinate out of range");
        }
    return {std::move(T), std::move(M)};
}

std::pair<SmallField, BaseMatrix> read_base_matrix(std::istream& is) {
    RmxHeader h = read_rmx_header(is);
    if (h.m != 1) throw std::runtime_error("RMX1: expected m=1 base matrix");
    SmallField F(h.p, h.s, h.basepoly);
    BaseMatrix M(h.rows, h.cols);
    std::string tok;
    for (std::size_t r = 0; r < h.rows; ++r)
        for (std::size_t c = 0; c < h.cols; ++c) {
            if (!(is >> tok)) throw std::runtime_error("RMX1: truncated body");
            std::uint64_t v = to_u64(tok);
            if (v >= F.q()) throw std::runtime_error("RMX1: value out of range");
            M.set(r, c, fq_t(v));
        }
    return {std::move(F), std::move(M)};
}

void write_tower_line(std::ostream& os, const FieldTower& T) {
    os << "TWR1 p=" << T.base().p() << " s=" << T.base().s() << " m=" << T.m()
       << " basepoly=" << format_poly(T.base().base_poly())
       << " extpoly=" << format_poly(T.ext_poly()) << "\n";
}

FieldTower read_tower_line(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("TWR1: missing line");
    std::istringstream ss(line);
    std::string magic;
    ss >> magic;
    if (magic != "TWR1") throw std::runtime_error("TWR1: bad magic " + magic);
    unsigned p = unsigned(to_u64(expect_key(ss, "p")));
    unsigned s = unsigned(to_u64(expect_key(ss, "s")));
    unsigned m = unsigned(to_u64(expect_key(ss, "m")));
    std::vector<fq_t> bp = parse_poly(expect_key(ss, "basepoly"));
    std::vector<fq_t> ep = parse_poly(expect_key(ss, "extpoly"));
    return FieldTower(SmallField(p, s, bp), m, ep);
}

void save_ext_matrix(const std::string& path, const FieldTower& T, const ExtMatrix& M) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path);
    write_ext_matrix(os, T, M);
}

std::pair<FieldTower, ExtMatrix> load_ext_matrix(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    return read_ext_matrix(is);
}

void save_base_matrix(const std::string& path, const SmallField& F, const BaseMatrix& M) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path);
    write_base_matrix(os, F, M);
}

std::pair<SmallField, BaseMatrix> load_base_matrix(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    return read_base_matrix(is);
}

}  // namespace rankstair
