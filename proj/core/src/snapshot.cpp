#include "frontsim/snapshot.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>

namespace frontsim {

void write_snapshot(std::ostream& os, const ScalarField& field, double t) {
    const GridSpec& g = field.grid();
    os.precision(17);
    os << g.nx << ' ' << g.ny << ' ' << g.dx << ' ' << g.dy << ' ' << t << '\n';
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            if (i) os << ' ';
            os << field(i, j);
        }
        os << '\n';
    }
    if (!os) throw std::runtime_error("write_snapshot: stream write failed");
}

void write_snapshot(const std::string& path, const ScalarField& field, double t) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("write_snapshot: cannot open " + path);
    write_snapshot(os, field, t);
}

Snapshot read_snapshot(std::istream& is) {
    int nx, ny;
    double dx, dy, t;
    if (!(is >> nx >> ny >> dx >> dy >> t))
        throw std::runtime_error("read_snapshot: bad header");
    GridSpec g(nx, ny, dx, dy);
    std::vector<double> values(g.size());
    for (double& v : values)
        if (!(is >> v)) throw std::runtime_error("read_snapshot: truncated value block");
    return Snapshot{ScalarField(g, std::move(values)), t};
}

Snapshot read_snapshot(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("read_snapshot: cannot open " + path);
    return read_snapshot(is);
}

} // namespace frontsim
