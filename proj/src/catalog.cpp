#include "coring/catalog.hpp"

#include <map>
#include <stdexcept>

namespace coring {

namespace {

const char* const kMain = R"json({
  "rings": {
    "Q": {"kind": "field"},
    "M2": {"kind": "matrix", "n": 2},
    "M2c": {"kind": "corner", "ring": "M2", "indices": ["1"]},
    "D2": {"kind": "direct_sum", "of": ["Q", "Q"]},
    "kA2": {"kind": "path", "vertices": ["1", "2"],
            "arrows": [{"label": "a", "source": "1", "target": "2"}]},
    "kA3": {"kind": "path", "vertices": ["1", "2", "3"],
            "arrows": [{"label": "a", "source": "1", "target": "2"},
                       {"label": "b", "source": "2", "target": "3"}]},
    "R2": {"kind": "rees", "base": "Q", "n": 2},
    "Minf": {"kind": "infinite_matrix"},
    "Ainf": {"kind": "infinite_path"}
  },
  "modules": {
    "Row": {"kind": "right_ideal", "ring": "M2", "indices": ["1"]},
    "E11A": {"kind": "corner_right_ideal", "ring": "M2", "indices": ["1"]},
    "Col": {"kind": "left_ideal", "ring": "M2", "indices": ["1"]},
    "M2reg": {"kind": "regular", "ring": "M2"},
    "M2creg": {"kind": "regular", "ring": "M2c"},
    "Qreg": {"kind": "regular", "ring": "Q"},
    "kA2reg": {"kind": "regular", "ring": "kA2"},
    "P1": {"kind": "right_ideal", "ring": "kA2", "indices": ["1"]},
    "P2c": {"kind": "left_ideal", "ring": "kA2", "indices": ["2"]},
    "kA3reg": {"kind": "regular", "ring": "kA3"},
    "RowInf": {"kind": "right_ideal", "ring": "Minf", "indices": ["1"]}
  },
  "morphisms": {
    "diag": {"kind": "explicit", "source": "Q", "target": "M2",
             "images": {"1": {"E11": "1", "E22": "1"}}},
    "idQ": {"kind": "identity", "ring": "Q"},
    "sep": {"kind": "explicit", "source": "D2", "target": "M2",
            "images": {"Q1.1": {"E11": "1"}, "Q2.1": {"E22": "1"}}},
    "pathdiag": {"kind": "explicit", "source": "Q", "target": "kA2",
                 "images": {"1": {"e1": "1", "e2": "1"}}},
    "pathsep": {"kind": "explicit", "source": "D2", "target": "kA2",
                "images": {"Q1.1": {"e1": "1"}, "Q2.1": {"e2": "1"}}}
  },
  "corings": {
    "Triv": {"kind": "trivial", "ring": "M2"},
    "TrivQ": {"kind": "trivial", "ring": "Q"},
    "TrivPath": {"kind": "trivial", "ring": "kA2"},
    "TrivA3": {"kind": "trivial", "ring": "kA3"},
    "TrivAinf": {"kind": "trivial", "ring": "Ainf"},
    "Sw": {"kind": "sweedler", "morphism": "diag"},
    "SwId": {"kind": "sweedler", "morphism": "idQ"},
    "SwSep": {"kind": "sweedler", "morphism": "sep"},
    "SwPath": {"kind": "sweedler", "morphism": "pathdiag"},
    "SwPathSep": {"kind": "sweedler", "morphism": "pathsep"},
    "SplitQ": {"kind": "split", "ring": "Q", "module": "Qreg"},
    "SplitM2": {"kind": "split", "ring": "M2", "module": "M2reg"},
    "SplitPath": {"kind": "split", "ring": "kA2", "module": "kA2reg"},
    "Comatrix": {"kind": "comatrix", "sigma": "Row"},
    "ComatrixCorner": {"kind": "comatrix", "sigma": "E11A"},
    "ComatrixPath": {"kind": "comatrix", "sigma": "P1"},
    "ComatrixInf": {"kind": "comatrix", "sigma": "RowInf"},
    "BaseExt": {"kind": "base_extension", "sigma": "Row", "coring": "SwId"},
    "BaseExtT": {"kind": "base_extension", "sigma": "Row", "coring": "TrivQ"},
    "BaseExtPath": {"kind": "base_extension", "sigma": "P1", "coring": "SwId"},
    "Rees": {"kind": "rees", "ring": "M2", "indices": ["1"]},
    "ReesR2": {"kind": "rees", "ring": "R2", "indices": ["1:1"]}
  },
  "coring_morphisms": {
    "BaseExtIso": {"kind": "base_extension_to_comatrix", "source": "BaseExtT", "target": "Comatrix"},
    "epsComatrix": {"kind": "counit", "coring": "Comatrix"},
    "idComatrix": {"kind": "identity", "coring": "Comatrix"},
    "epsSw": {"kind": "counit", "coring": "Sw"}
  },
  "comodules": {
    "CofreeM2": {"kind": "cofree", "module": "M2reg", "coring": "Comatrix"},
    "CofreeRow": {"kind": "cofree", "module": "Row", "coring": "Sw"},
    "RegComatrix": {"kind": "regular", "coring": "Comatrix"},
    "RegSw": {"kind": "regular", "coring": "Sw"},
    "RowComodule": {"kind": "comatrix", "sigma": "Row", "coring": "Comatrix"},
    "RowTrivial": {"kind": "corestrict", "morphism": "epsComatrix", "comodule": "RowComodule"},
    "RowSame": {"kind": "corestrict", "morphism": "idComatrix", "comodule": "RowComodule"},
    "SwTrivial": {"kind": "corestrict", "morphism": "epsSw", "comodule": "RegSw"}
  },
  "cells": {
    "idTriv": {"kind": "identity", "coring": "Triv"},
    "idTrivQ": {"kind": "identity", "coring": "TrivQ"},
    "idSw": {"kind": "identity", "coring": "Sw"},
    "idComatrix": {"kind": "identity", "coring": "Comatrix"},
    "idRees": {"kind": "identity", "coring": "Rees"},
    "idSplitQ": {"kind": "identity", "coring": "SplitQ"},
    "collapseComatrix": {"kind": "collapse", "coring": "Comatrix", "module": "M2reg"},
    "collapseSw": {"kind": "collapse", "coring": "Sw", "module": "M2reg"},
    "counitComatrix": {"kind": "morphism", "morphism": "epsComatrix"},
    "rowCell": {"kind": "comodule", "comodule": "RowComodule"},
    "rowCollapse": {"kind": "compose", "of": ["rowCell", "collapseComatrix"]}
  },
  "two_cells": {
    "collapse2": {"kind": "collapse", "cell": "collapseComatrix", "scale": "2"},
    "collapse3": {"kind": "collapse", "cell": "collapseComatrix", "scale": "3"},
    "collapse6": {"kind": "vertical", "of": ["collapse3", "collapse2"]},
    "zeroCollapse": {"kind": "zero", "source": "collapseComatrix", "target": "collapseComatrix"},
    "idCollapse": {"kind": "collapse", "cell": "idComatrix"},
    "rowUnit": {"kind": "collapse", "cell": "rowCell"},
    "swUnit": {"kind": "collapse", "cell": "collapseSw", "scale": "1/2"},
    "outer": {"kind": "horizontal", "of": ["idCollapse", "collapse2"]}
  },
  "adjunctions": {
    "Row": {"kind": "adjunction", "sigma": "Row", "coring": "SwId"},
    "E11A": {"kind": "adjunction", "sigma": "E11A"},
    "P1": {"kind": "adjunction", "sigma": "P1", "coring": "SwId"},
    "M2reg": {"kind": "adjunction", "sigma": "M2reg", "coring": "Triv"}
  },
  "dual_tensors": {
    "ColRow": {"kind": "dual_tensor", "w": "Col", "sigma": "Row"},
    "CornerE11A": {"kind": "dual_tensor", "w": "M2creg", "sigma": "E11A"},
    "QRow": {"kind": "dual_tensor", "w": "Qreg", "sigma": "Row"},
    "PathPair": {"kind": "dual_tensor", "w": "P2c", "sigma": "P1"}
  }
}
)json";

const char* const kCorruptedProduct = R"json({
  "rings": {
    "M2": {"kind": "matrix", "n": 2},
    "M2bad": {"kind": "corrupted", "ring": "M2", "left": "E12", "right": "E21", "value": {"E11": "2"}}
  }
}
)json";

const char* const kSwappedLegs = R"json({
  "rings": {
    "Q": {"kind": "field"},
    "M2": {"kind": "matrix", "n": 2}
  },
  "morphisms": {
    "diag": {"kind": "explicit", "source": "Q", "target": "M2",
             "images": {"1": {"E11": "1", "E22": "1"}}}
  },
  "corings": {
    "Sw": {"kind": "sweedler", "morphism": "diag"},
    "SwSwapped": {"kind": "swapped", "coring": "Sw"}
  }
}
)json";

const char* const kCorruptedDualBasis = R"json({
  "rings": {
    "M2": {"kind": "matrix", "n": 2}
  },
  "modules": {
    "Row": {"kind": "right_ideal", "ring": "M2", "indices": ["1"]}
  },
  "adjunctions": {
    "Row": {"kind": "adjunction", "sigma": "Row"},
    "RowBad": {"kind": "adjunction", "sigma": "Row", "corrupt": {"component": "1", "factor": "2"}}
  }
}
)json";

const char* const kBadMorphism = R"json({
  "rings": {
    "Q": {"kind": "field"},
    "M2": {"kind": "matrix", "n": 2}
  },
  "morphisms": {
    "corner": {"kind": "explicit", "source": "Q", "target": "M2", "images": {"1": {"E11": "1"}}}
  }
}
)json";

const char* const kRandomTwoCell = R"json({
  "rings": {
    "Q": {"kind": "field"},
    "M2": {"kind": "matrix", "n": 2}
  },
  "morphisms": {
    "diag": {"kind": "explicit", "source": "Q", "target": "M2",
             "images": {"1": {"E11": "1", "E22": "1"}}}
  },
  "corings": {
    "Sw": {"kind": "sweedler", "morphism": "diag"}
  },
  "cells": {
    "idSw": {"kind": "identity", "coring": "Sw"}
  },
  "two_cells": {
    "random": {"kind": "random", "source": "idSw", "target": "idSw", "seed": 7}
  }
}
)json";

const std::map<std::string, std::string>& documents() {
  static const std::map<std::string, std::string> docs = {
      {"main", kMain},
      {"faults/corrupted-product", kCorruptedProduct},
      {"faults/swapped-legs", kSwappedLegs},
      {"faults/corrupted-dual-basis", kCorruptedDualBasis},
      {"faults/bad-morphism", kBadMorphism},
      {"faults/random-two-cell", kRandomTwoCell},
  };
  return docs;
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& [name, doc] : documents()) out.push_back(name);
  return out;
}

const std::string& catalog_document(const std::string& name) {
  auto it = documents().find(name);
  if (it == documents().end()) throw std::out_of_range("no built-in catalog named '" + name + "'");
  return it->second;
}

}  // namespace coring
