from ml_collections import config_dict


def get_config():
    config = config_dict.ConfigDict()
    # general
    config.seed = 38
    # brute force
    config.enumeration_budget = 2**26
    # cube search
    config.decompose_search_budget = 200_000
    # sweeps
    config.sweep_max_n = 4
    config.sweep_chunk_size = 4096
    config.workers = 0
    config.workers_env = "CUBELC_WORKERS"
    # io
    config.out_dir = "results"

    return config
