import hypothesis

hypothesis.settings.register_profile(
    "primediff", deadline=None, max_examples=60
)
hypothesis.settings.load_profile("primediff")
