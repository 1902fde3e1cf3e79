import logging

from django.utils.deprecation import MiddlewareMixin

logger = logging.getLogger(__name__)


class LoggingMiddleware(MiddlewareMixin):
    def process_request(self, request):
        request.info = {
            'ip_address': self.get_client_ip(request),
            'request_path': request.path,
        }
        return None

    def get_client_ip(self, request):
        x_forwarded_for = request.META.get('HTTP_X_FORWARDED_FOR')
        if x_forwarded_for:
            return x_forwarded_for.split(',')[0]
        return request.META.get('REMOTE_ADDR')

    def process_response(self, request, response):
        if hasattr(request, 'info'):
            logger.info(
                f"{request.method} {request.path} - {response.status_code} - {request.info['ip_address']}",
                extra={'suite': ''},
            )
        return response
