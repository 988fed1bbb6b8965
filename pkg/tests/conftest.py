from hypothesis import settings

settings.register_profile("ksubmax", deadline=None)
settings.load_profile("ksubmax")
