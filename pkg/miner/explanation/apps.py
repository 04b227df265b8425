from django.apps import AppConfig


class ExplanationConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "explanation"
