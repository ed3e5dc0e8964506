from .cli.runner import entrypoint

entrypoint()
