"""Toolkit for building slogan corpora from company web metadata and for
generating and scoring slogan candidates."""

from .annotate import (
    CONTROL_CODES,
    POS_CONTROL_CODES,
    BuiltinTagger,
    HttpTagger,
    SubprocessTagger,
    coarse_pos,
    derive_control_code,
    find_entities,
    tag_pos,
    tag_word,
)
from .baselines import (
    GAConfig,
    SkeletonModel,
    crossover,
    first_k_words,
    first_sentence,
    generate_slogans,
    mine_skeleton_model,
    sweep_first_k,
)
from .corpus import (
    CleaningConfig,
    CompanyRecord,
    CorpusStats,
    Rejection,
    SloganPair,
    clean_pipeline,
    compute_corpus_stats,
    extract_title_slogan,
    split_dataset,
)
from .ctrlprep import (
    assemble_prompt,
    condition_rows,
    sample_inference_codes,
    truncate_description,
    upsample_by_code,
)
from .delex import DelexResult, NoSurfaceError, delexicalise_company, relexicalise
from .entmask import (
    EntitySpan,
    MaskMap,
    OverlapError,
    filter_hallucination_pairs,
    mask_pair,
    repair_mask_tokens,
    unmask_slogan,
)
from .genclient import (
    DecodingConfig,
    GenerationError,
    GenerationRequest,
    GenerationResponse,
    HttpBackend,
    end_to_end_generate,
    generate_with_retry,
)
from .metrics import (
    RougeScore,
    abstractiveness,
    cohens_kappa,
    ctrl_accuracy,
    diversity,
    mean_rouge,
    paired_t_test,
    rouge_l,
    rouge_n,
    wilcoxon_signed_rank,
)

__version__ = "0.1.0"

__all__ = [
    "BuiltinTagger",
    "CleaningConfig",
    "CompanyRecord",
    "CONTROL_CODES",
    "CorpusStats",
    "DecodingConfig",
    "DelexResult",
    "EntitySpan",
    "GAConfig",
    "GenerationError",
    "GenerationRequest",
    "GenerationResponse",
    "HttpBackend",
    "HttpTagger",
    "MaskMap",
    "NoSurfaceError",
    "OverlapError",
    "POS_CONTROL_CODES",
    "Rejection",
    "RougeScore",
    "SkeletonModel",
    "SloganPair",
    "SubprocessTagger",
    "abstractiveness",
    "assemble_prompt",
    "clean_pipeline",
    "coarse_pos",
    "cohens_kappa",
    "compute_corpus_stats",
    "condition_rows",
    "crossover",
    "ctrl_accuracy",
    "delexicalise_company",
    "derive_control_code",
    "diversity",
    "end_to_end_generate",
    "extract_title_slogan",
    "filter_hallucination_pairs",
    "find_entities",
    "first_k_words",
    "first_sentence",
    "generate_slogans",
    "generate_with_retry",
    "mask_pair",
    "mean_rouge",
    "mine_skeleton_model",
    "paired_t_test",
    "relexicalise",
    "repair_mask_tokens",
    "rouge_l",
    "rouge_n",
    "sample_inference_codes",
    "split_dataset",
    "sweep_first_k",
    "tag_pos",
    "tag_word",
    "truncate_description",
    "unmask_slogan",
    "upsample_by_code",
    "wilcoxon_signed_rank",
]
