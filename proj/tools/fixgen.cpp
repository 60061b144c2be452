/* Writes the fixture files into the directory given as the only argument
 * (default: ./fixtures).  Keeping them generated guarantees they stay byte
 * identical to the built-in objects the tests compare against. */
#include <iostream>

#include "pisot/fixtures.hpp"
#include "pisot/io.hpp"

int main(int argc, char** argv) {
  using namespace pisot;
  std::string dir = argc > 1 ? argv[1] : "fixtures";
  try {
    write_text_file(dir + "/phi2.json", dump_json(numeration_to_json(fixture_phi2())));
    write_text_file(dir + "/zeckendorf.json", dump_json(numeration_to_json(fixture_zeckendorf())));
    write_text_file(dir + "/series_phi2.json",
                    dump_json(linrep_to_json(fixture_series_phi2<NatSemiring>())));
    write_text_file(dir + "/golden_v_phi2.json",
                    dump_json(linrep_to_json(fixture_value_series_phi2<NatSemiring>())));
  } catch (const std::exception& e) {
    std::cerr << "fixgen: " << e.what() << "\n";
    return 1;
  }
  std::cout << "wrote 4 fixture files to " << dir << "\n";
  return 0;
}
