#pragma once

#include <map>
#include <string>
#include <vector>

#include "kc/bound.hpp"
#include "kc/diagram.hpp"

namespace kc {

// Alternating diagram generators. Both build the 4-valent map explicitly and
// assign over/under from the checkerboard face coloring, so every output is
// a reduced alternating diagram realizing its crossing count.

// 4-plat from a positive twist list; throws when the closure is a link.
Diagram rational_diagram(const std::vector<int>& twists);

// Pretzel with the given strand twist counts; throws when it is a link.
Diagram pretzel_diagram(const std::vector<int>& twists);

// The bundled catalog: standard names and crossing numbers through nine
// crossings, paired with generated minimal diagrams of the right size.
struct Fixture {
    std::string name;
    int crossings = 0;
    std::string construction;  // e.g. "rational[2,3]"
    Diagram diagram;
};

const std::vector<Fixture>& bundled_fixtures();
const KnotTable& bundled_table();
Diagram bundled_diagram(const std::string& name);

// knots.csv contents matching the bundled table.
std::string bundled_table_csv();

// Resolves the data directory: KNOTCOMB_DATA when set, else built-in data.
// Returns the diagram from <dir>/pd/<name>.pd when present, else the
// generated fixture.
Diagram fixture_diagram(const std::string& name);
KnotTable fixture_table();

}  // namespace kc
