#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aggclone/errors.hpp"

namespace aggclone {

// Index of an element inside the lattice that issued it.
using Elem = std::int32_t;

// Raw description of a bounded lattice: element names plus cover pairs
// (lower, upper). The order is the reflexive-transitive closure of the covers.
struct LatticeSpec {
    std::string name;
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> covers;
};

// A finite bounded lattice with precomputed order matrix and meet/join tables.
//
// Elements are indexed 0..n-1 along a linear extension of the order, so
// x <= y always implies index(x) <= index(y); in particular bottom is 0 and
// top is n-1. Lattice is a cheap shared handle: copies refer to the same
// instance and FnTables built on it stay valid.
class Lattice {
public:
    static Lattice build(const LatticeSpec& spec, const Limits& limits = {});
    static Lattice chain(int m);
    static Lattice boolean(int r, const Limits& limits = {});
    static Lattice product(const Lattice& a, const Lattice& b, const Limits& limits = {});
    static Lattice dual(const Lattice& l);

    const std::string& name() const;
    int size() const;
    const std::string& elem_name(Elem x) const;
    std::optional<Elem> find(std::string_view elem) const;
    // Throws ParseError when the name is unknown.
    Elem require(std::string_view elem) const;

    bool leq(Elem x, Elem y) const;
    Elem meet(Elem x, Elem y) const;
    Elem join(Elem x, Elem y) const;
    Elem bottom() const;
    Elem top() const;

    const std::vector<Elem>& upper_covers(Elem x) const;
    const std::vector<Elem>& lower_covers(Elem x) const;
    // All y with x <= y, ascending by index (so starting with x).
    const std::vector<Elem>& up_set(Elem x) const;

    // Same element identity (tables built on one are valid for the other).
    bool same_instance(const Lattice& o) const { return data_ == o.data_; }
    // Structural equality: same names in the same positions and same order.
    bool same_tables(const Lattice& o) const;

private:
    struct Data;
    explicit Lattice(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
    std::shared_ptr<const Data> data_;
};

} // namespace aggclone
