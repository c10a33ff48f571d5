// Writes the bundled fixture files: data/knots.csv and data/pd/<name>.pd.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "kc/fixtures.hpp"

int main(int argc, char** argv) {
    std::string out = argc > 1 ? argv[1] : "data";
    std::filesystem::create_directories(out + "/pd");

    std::ofstream csv(out + "/knots.csv");
    csv << kc::bundled_table_csv();

    for (const auto& f : kc::bundled_fixtures()) {
        std::ofstream pd(out + "/pd/" + f.name + ".pd");
        pd << "# " << f.name << " crossings " << f.crossings << " via " << f.construction
           << "\n";
        pd << f.diagram.to_pd();
    }
    std::cout << "wrote " << kc::bundled_fixtures().size() << " diagrams under " << out << "\n";
    return 0;
}
