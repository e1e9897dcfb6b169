class Constants:
    SCHEMA = "schema"
    SCHEMA_VERSION = "v1"

    # config.yaml sections
    LATTICE = "lattice"
    INTEGRATOR = "integrator"
    INITIAL_CONDITIONS = "initial_conditions"
    CLOSED_FORM = "closed_form"
    PATHS = "paths"
    SWEEP = "sweep"
    OUTPUT = "output"

    # system ids
    REAL = "real"
    COMPLEX = "complex"
    COUPLED = "coupled"

    # initial condition recipes
    EXPLICIT = "explicit"
    H3_SPLIT = "h3-split"
    ENSTROPHY_SPLIT = "enstrophy-split"
    NEAR_SADDLE = "near-saddle"

    # environment override for the defaults file
    CONFIG_ENV = "TRIADLAB_CONFIG"

    CSV_FLOAT_FORMAT = ".17g"
