#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "qd/gf.hpp"
#include "qd/group.hpp"
#include "qd/nearfield.hpp"

namespace qd {

namespace detail {

inline int spec_int(const std::string& body, const std::string& token) {
    if (body.empty() || body.size() > 6)
        throw std::invalid_argument("bad group spec '" + token + "': expected a small positive integer after the colon");
    long long v = 0;
    for (char ch : body) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw std::invalid_argument("bad group spec '" + token + "': expected a small positive integer after the colon");
        v = v * 10 + (ch - '0');
    }
    if (v < 1 || v > kHardOrderCap)
        throw std::invalid_argument("bad group spec '" + token + "': integer out of range");
    return static_cast<int>(v);
}

/// Minimal parser for perm:[[...],[...]] generator lists (JSON array of
/// 0-based permutation arrays).
inline std::vector<Perm> parse_perm_lists(const std::string& body, const std::string& token) {
    auto fail = [&]() -> std::invalid_argument {
        return std::invalid_argument("bad group spec '" + token +
                                     "': expected perm:[[...],[...]] with 0-based permutation arrays");
    };
    size_t i = 0;
    auto skip = [&]() { while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i; };
    auto expect = [&](char ch) { skip(); if (i >= body.size() || body[i] != ch) throw fail(); ++i; };
    auto parse_int = [&]() {
        skip();
        size_t start = i;
        while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) ++i;
        if (i == start || i - start > 6) throw fail();
        return std::stoi(body.substr(start, i - start));
    };
    std::vector<Perm> gens;
    expect('[');
    skip();
    if (i < body.size() && body[i] == ']') { ++i; }
    else {
        for (;;) {
            Perm p;
            expect('[');
            skip();
            if (i < body.size() && body[i] == ']') { ++i; }
            else {
                for (;;) {
                    p.push_back(parse_int());
                    skip();
                    if (i < body.size() && body[i] == ',') { ++i; continue; }
                    expect(']');
                    break;
                }
            }
            gens.push_back(std::move(p));
            skip();
            if (i < body.size() && body[i] == ',') { ++i; continue; }
            expect(']');
            break;
        }
    }
    skip();
    if (i != body.size()) throw fail();
    if (gens.empty()) throw fail();
    return gens;
}

}  // namespace detail

/// Build a group from a spec token: Z:n, D:n (dihedral of order 2n),
/// S:n, A:n, Q:8, AGL1:q (affine group of GF(q)), NF:J9 (affine group of
/// the order-9 proper near-field), perm:[[...],[...]] (permutation
/// generators). Unknown tokens are rejected before any computation.
inline FiniteGroup group_from_spec(const std::string& token, int cap = kDefaultOrderCap) {
    const size_t colon = token.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("bad group spec '" + token +
                                    "': expected Z:n, D:n, S:n, A:n, Q:8, AGL1:q, NF:J9, or perm:[[...],[...]]");
    const std::string head = token.substr(0, colon);
    const std::string body = token.substr(colon + 1);
    if (head == "Z") return cyclic_group(detail::spec_int(body, token), cap);
    if (head == "D") {
        int n = detail::spec_int(body, token);
        if (n < 3) throw std::invalid_argument("bad group spec '" + token + "': dihedral needs n >= 3");
        return dihedral_group(n, cap);
    }
    if (head == "S") return symmetric_group(detail::spec_int(body, token), cap);
    if (head == "A") {
        int n = detail::spec_int(body, token);
        if (n < 3) throw std::invalid_argument("bad group spec '" + token + "': alternating needs n >= 3");
        return alternating_group(n, cap);
    }
    if (head == "Q") {
        if (body != "8") throw std::invalid_argument("bad group spec '" + token + "': only Q:8 is available");
        return quaternion_group();
    }
    if (head == "AGL1") return affine_group(detail::spec_int(body, token), cap).group;
    if (head == "NF") {
        if (body != "J9") throw std::invalid_argument("bad group spec '" + token + "': only NF:J9 is available");
        return affine_group_from_nearfield(build_dickson_j9());
    }
    if (head == "perm") return closure_from_generators(detail::parse_perm_lists(body, token), cap);
    throw std::invalid_argument("bad group spec '" + token +
                                "': expected Z:n, D:n, S:n, A:n, Q:8, AGL1:q, NF:J9, or perm:[[...],[...]]");
}

}  // namespace qd
