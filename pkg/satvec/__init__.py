from satvec.constraint_gen import DEFAULT_WIDTHS, SENTENCE_WIDTHS, Widths
from satvec.constraint_system import ConstraintSystem, build_system, load_system
from satvec.decoder import DecodeOptions, Decoder, decode, decode_all
from satvec.encoder import encode
from satvec.graph import Graph, canonical_text, term
from satvec.signature import Signature, declare_signature, signature_from_text
from satvec.symbols import Symbol
from satvec.vectors import CountVector

ConstraintSystem = ConstraintSystem
CountVector = CountVector
DEFAULT_WIDTHS = DEFAULT_WIDTHS
DecodeOptions = DecodeOptions
Decoder = Decoder
Graph = Graph
SENTENCE_WIDTHS = SENTENCE_WIDTHS
Signature = Signature
Symbol = Symbol
Widths = Widths
build_system = build_system
canonical_text = canonical_text
declare_signature = declare_signature
decode = decode
decode_all = decode_all
encode = encode
load_system = load_system
signature_from_text = signature_from_text
term = term

__version__ = "0.1.0"
