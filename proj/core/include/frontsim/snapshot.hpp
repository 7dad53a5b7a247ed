#ifndef FRONTSIM_SNAPSHOT_HPP
#define FRONTSIM_SNAPSHOT_HPP

#include <iosfwd>
#include <string>

#include "frontsim/field.hpp"

namespace frontsim {

// Snapshot file format: one ASCII header line "nx ny dx dy t" followed by
// nx*ny whitespace-separated values in row-major order (index = j*nx + i,
// i fastest). The grid origin is not part of the format.

void write_snapshot(std::ostream& os, const ScalarField& field, double t);
void write_snapshot(const std::string& path, const ScalarField& field, double t);

struct Snapshot {
    ScalarField field; // grid origin restored as (0,0)
    double t = 0.0;
};

Snapshot read_snapshot(std::istream& is);
Snapshot read_snapshot(const std::string& path);

} // namespace frontsim

#endif
