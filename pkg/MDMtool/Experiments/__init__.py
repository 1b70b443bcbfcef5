from ._parallel import parallel_map, tile_rng
from .tiles import gen_random_tile, gen_dnn_like_tile, gen_dnn_like_weights
from .fit import fit_linear_map, hypothesis_fit
from .benchmark import nf_benchmark, benchmark_frame, configure, CONFIGURATIONS
from .noise import unit_deficits, fit_eta, calibrate_eta, inject_noise, accuracy_proxy, accuracy_sweep, \
    accuracy_frame
from .reports import write_json, write_csv
