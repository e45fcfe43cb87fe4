import hypothesis

hypothesis.settings.register_profile(
    "exen", derandomize=True, max_examples=60, deadline=None
)
hypothesis.settings.load_profile("exen")
