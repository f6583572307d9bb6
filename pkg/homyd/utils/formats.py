# homyd/formats
from .colors import fg, rs

RESET = rs

FORMAT_HEADER = "FORMAT"

STRUCTURE_KINDS = ("ALGEBRA", "COALGEBRA", "BIALGEBRA", "HOPF")

REPRESENTATION_KINDS = ("ACTION", "COACTION")

BLOCK_KINDS = STRUCTURE_KINDS + REPRESENTATION_KINDS + ("RMATRIX", "FORM", "TMAP")

# header stanzas take words, not scalars
HEADER_STANZAS = ("DIM", "BASIS", "OVER", "CARRIER", "SOURCE")

# keyword -> (index spaces, value count); "m" is the block's own space,
# "n" the Hom-bialgebra named by OVER, "nm" their tensor product
STANZAS = {
    "MULT": (("m", "m"), "m"),
    "UNIT": ((), "m"),
    "COMULT": (("m", "m", "m"), 1),
    "COUNIT": ((), "m"),
    "TWIST": (("m",), "m"),
    "ANTIPODE": (("m",), "m"),
    "ACT": (("n", "m"), "m"),
    "COACT": (("m",), "nm"),
    "ENTRY": (("n", "n"), 1),
    "T": (("m", "n"), "nm"),
}

# canonical printing order
STANZA_ORDER = tuple(STANZAS)

KIND_HEADERS = {
    "ALGEBRA": ("DIM", "BASIS"),
    "COALGEBRA": ("DIM", "BASIS"),
    "BIALGEBRA": ("DIM", "BASIS"),
    "HOPF": ("DIM", "BASIS"),
    "ACTION": ("DIM", "BASIS", "OVER", "CARRIER"),
    "COACTION": ("DIM", "BASIS", "OVER", "CARRIER"),
    "RMATRIX": ("OVER",),
    "FORM": ("OVER",),
    "TMAP": ("OVER", "SOURCE"),
}

KIND_STANZAS = {
    "ALGEBRA": ("MULT", "UNIT", "TWIST"),
    "COALGEBRA": ("COMULT", "COUNIT", "TWIST"),
    "BIALGEBRA": ("MULT", "UNIT", "COMULT", "COUNIT", "TWIST"),
    "HOPF": ("MULT", "UNIT", "COMULT", "COUNIT", "TWIST", "ANTIPODE"),
    "ACTION": ("ACT", "TWIST"),
    "COACTION": ("COACT", "TWIST"),
    "RMATRIX": ("ENTRY",),
    "FORM": ("ENTRY",),
    "TMAP": ("T",),
}

FORMAT_GRAMMAR = """
document   := "FORMAT 1" NL field NL { block | comment | blank }
field      := "FIELD Q" | "FIELD GF" prime
block      := kind name NL { stanza NL } "END"
kind       := ALGEBRA | COALGEBRA | BIALGEBRA | HOPF | ACTION | COACTION
            | RMATRIX | FORM | TMAP
stanza     := "DIM" n | "BASIS" label{n} | "OVER" name | "CARRIER" name
            | "SOURCE" name
            | "MULT" i j ":" scalar{n}        e_i e_j
            | "UNIT" ":" scalar{n}
            | "COMULT" i j k ":" scalar        coefficient of e_j(x)e_k in Delta(e_i)
            | "COUNIT" ":" scalar{n}
            | "TWIST" i ":" scalar{n}          image of e_i
            | "ANTIPODE" i ":" scalar{n}
            | "ACT" h m ":" scalar{m}          h |> e_m
            | "COACT" m ":" scalar{n*m}        rho(e_m), H (x) M flattening
            | "ENTRY" i j ":" scalar           R or sigma coefficient
            | "T" c h ":" scalar{n*m}          T(c (x) h), H (x) C flattening
comment    := "#" ...
scalar     := ["+"|"-"] digits ["/" digits]

Omitted entries are zero. A block without TWIST stanzas has the identity
twist. An ACTION and a COACTION with the same name over the same
Hom-bialgebra form a Yetter-Drinfeld module.
"""

EPILOG = f"""
examples:
  {fg.BYELLOW}homyd catalog export taft-radford --param 2 --emit ha.txt{RESET}
  {fg.BYELLOW}homyd check ha.txt --witness{RESET}
  {fg.BYELLOW}homyd construct biproduct ha.txt --carrier Ha --over KZ2 --emit b.txt{RESET}
  {fg.BYELLOW}homyd antipode b.txt{RESET}
"""
