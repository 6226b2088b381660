#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nss/presentation.hpp"

namespace nss {

struct ParsedFile {
  LinkPresentation p;
  std::vector<bool> spin_given;  // per component, whether the file supplied it
};

// Presentation file schema (JSON):
// {
//   "r": 4, "tol": 1e-9,
//   "diagram": ["cup 0 lu", "x+ 0", ...],
//   "components": [
//     {"id": 0, "role": "surgery"|"physical", "orientation": 1|-1,
//      "color": {"type":"simple","alpha":[re,im],"scale":[re,im]}
//             | {"type":"eps","k":n} | {"type":"kirby","alpha":[re,im],"scale":[re,im]},
//      "spin": [re, im]}
//   ]
// }
// "spin" may be omitted (spin-solve input); "color" is omitted for surgery
// components; "scale" defaults to 1.
ParsedFile read_presentation(std::istream& in);
ParsedFile read_presentation_file(const std::string& path);
std::string write_presentation(const LinkPresentation& p);

}  // namespace nss
