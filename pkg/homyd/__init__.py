"""
 //  //   //////   ///    ///  //   //  ////////
 //  //  //    //  ////  ////   // //   //     //
 //////  //    //  // //// //    ///    //     //
 //  //  //    //  //  //  //    //     //     //
 //  //   //////   //      //    //     ////////

Exact-arithmetic workbench for Hom-Hopf algebras.

Check the axioms of every block in a structure file.
        example homyd check ha.txt --witness

Build a Radford biproduct and print its antipode.
        example homyd construct biproduct ha.txt --carrier Ha --over KZ2 --emit b.txt
        example homyd antipode b.txt

Braided category and Hom-Yang-Baxter checks on Yetter-Drinfeld modules.
        example homyd braiding-test modules.txt
        example homyd ybe-test modules.txt --modules V W

Quasitriangular and cobraided structures.
        example homyd quasitriangular-check r.txt

Built-in examples.
        example homyd catalog list
        example homyd catalog check taft-radford --param 3 --field "GF 7"
"""

__version__ = "0.1.0"

from .core.actions import ActionMap, CoactionMap, YDModule, check_hyd, check_hyd_prime
from .core.braided import check_braided_category, check_hybe
from .core.constructions import (
    RadfordBundle,
    biproduct_antipode,
    radford_biproduct,
    smash_coproduct,
    smash_product,
    t_smash_coproduct,
)
from .core.document import export_text, load
from .core.exact import GF, QQ, Matrix
from .core.exceptions import ConstructionError, DocumentError, HomydError
from .core.quasitriangular import CobraidingForm, RMatrix, check_quasitriangular
from .core.report import Report
from .core.structures import HomAlgebra, HomBialgebra, HomCoalgebra, HomHopf
from .cli.main import CommandMapper, main

__all__ = [
    "ActionMap",
    "CoactionMap",
    "YDModule",
    "check_hyd",
    "check_hyd_prime",
    "check_braided_category",
    "check_hybe",
    "RadfordBundle",
    "biproduct_antipode",
    "radford_biproduct",
    "smash_coproduct",
    "smash_product",
    "t_smash_coproduct",
    "export_text",
    "load",
    "GF",
    "QQ",
    "Matrix",
    "ConstructionError",
    "DocumentError",
    "HomydError",
    "CobraidingForm",
    "RMatrix",
    "check_quasitriangular",
    "Report",
    "HomAlgebra",
    "HomBialgebra",
    "HomCoalgebra",
    "HomHopf",
    "CommandMapper",
    "main",
]
