"""Crosscap classification of Cartesian products of graphs.

The package decides whether a Cartesian product of two connected simple
graphs is planar, embeds in the projective plane, or does neither, and it
backs every verdict with a certificate that an independent checker can
validate: a forbidden-minor witness (branch-set model) for negative
answers, or a verified rotation-system embedding for positive ones.
"""

from boxcap.graphs import (
    Graph,
    GraphError,
    are_isomorphic,
    degree_sequence,
    emit_dot,
    emit_graph6,
    enumerate_connected,
    find_isomorphism,
    from_edge_list,
    is_connected,
    is_cycle,
    is_path,
    is_tree,
    max_degree,
    parse_graph6,
)
from boxcap.minors import (
    BudgetExceededError,
    ContractEdge,
    DeleteEdge,
    DeleteVertex,
    MinorScript,
    MinorWitness,
    ScriptError,
    apply_script,
    has_minor,
    script_to_witness,
    verify_witness,
)
from boxcap.products import ProductGraph, cartesian_product, fiber, lift_script
from boxcap.embeddings import (
    SignedRotationEmbedding,
    base_embedding,
    contract_edge_embedded,
    delete_edge_embedded,
    delete_vertex_embedded,
    embed_family_product,
    embed_minor,
    euler_genus,
    extend_quad_insertion,
    extend_triangle_nesting,
    search_embedding,
    trace_faces,
    verify_projective,
)
from boxcap.classifier import (
    Verdict,
    certify,
    classify_product,
    crosscap,
    excludes_c3_obstructions,
    excludes_p3_obstructions,
    family_membership,
    is_outerplanar,
    is_planar_product,
    oracle_classify,
)
from boxcap import catalog

__all__ = [name for name in dir() if not name.startswith("_")]
