from .bitslice import quantize, quantization_scale, stack_groups, dequantize, column_density, fractional_bit, \
    closed_form_density, numerical_density, verify_theorem1
from .analytic import distance_sum, analytic_nf, row_scores, decomposition, apply_plan, invert_plan, \
    choose_dataflow, mdm_map, brute_force_optimal_nf
from .circuit import MeshSystem, device_conductance, build_mesh, solve_mesh, ideal_currents, measured_nf, \
    symmetry_check, export_netlist
