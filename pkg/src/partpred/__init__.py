"""Event participant prediction with a social-media support domain.

The package bridges a data-poor event platform (the target domain) to
retweeting activity (the social domain) through a shared-vocabulary joint
graph, joint user embeddings, an attention-fused dual-embedding recommender,
and a distillation-based transfer training schedule.
"""

__version__ = "0.1.0"
